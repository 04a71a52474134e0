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

#include "qipflow/witnesses/report_io.h"

namespace qipflow {

nlohmann::ordered_json report_to_json(const MeasureReport &report) {
    nlohmann::ordered_json j;
    j["measure"] = report.measure;
    j["value"] = report.value;
    if (report.convention) {
        j["convention"] = std::string(convention_name(*report.convention));
    } else {
        j["convention"] = nullptr;
    }
    j["initial_state"] = report.initial_state;
    auto intervals = nlohmann::ordered_json::array();
    auto gains = nlohmann::ordered_json::array();
    for (const auto &iv : report.intervals) {
        intervals.push_back({iv.t_start, iv.t_end});
        gains.push_back(iv.gain());
    }
    j["intervals"] = intervals;
    j["interval_gains"] = gains;
    nlohmann::ordered_json grid;
    grid["t_min"] = report.times.empty() ? 0.0 : report.times.front();
    grid["t_max"] = report.times.empty() ? 0.0 : report.times.back();
    grid["points"] = report.times.size();
    j["grid"] = grid;
    if (report.step) {
        j["step"] = *report.step;
        auto skipped = nlohmann::ordered_json::array();
        for (const auto &[a, b] : report.skipped) {
            skipped.push_back({a, b});
        }
        j["skipped_intervals"] = skipped;
    }
    return j;
}

std::string report_to_json_text(const MeasureReport &report) {
    return report_to_json(report).dump(2) + "\n";
}

CsvTable report_trajectory_csv(const MeasureReport &report) {
    CsvTable table;
    table.metadata.emplace_back("measure", report.measure);
    table.metadata.emplace_back("initial_state", report.initial_state);
    if (report.convention) {
        table.metadata.emplace_back("convention", std::string(convention_name(*report.convention)));
    }
    table.header = {"t", report.quantity.empty() ? "value" : report.quantity};
    for (size_t k = 0; k < report.times.size(); ++k) {
        table.rows.push_back({report.times[k], report.samples[k]});
    }
    return table;
}

}  // namespace qipflow
