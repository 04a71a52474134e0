// Copyright 2026 The qipflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIPFLOW_WITNESSES_REPORT_IO_H
#define QIPFLOW_WITNESSES_REPORT_IO_H

#include <string>

#include "json.hpp"
#include "qipflow/io/csv.h"
#include "qipflow/witnesses/measures.h"

namespace qipflow {

/// Fields: measure, value, convention (null unless QIP), initial_state,
/// intervals ([t_start, t_end] pairs), interval_gains, grid {t_min, t_max,
/// points}, plus step / skipped_intervals for the divisibility measure.
nlohmann::ordered_json report_to_json(const MeasureReport &report);
std::string report_to_json_text(const MeasureReport &report);

/// Monitored quantity on the grid: columns t and report.quantity.
CsvTable report_trajectory_csv(const MeasureReport &report);

}  // namespace qipflow

#endif
