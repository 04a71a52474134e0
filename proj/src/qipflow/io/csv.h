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

#ifndef QIPFLOW_IO_CSV_H
#define QIPFLOW_IO_CSV_H

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qipflow {

/// Numeric table with `# key=value` comment lines ahead of the header.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    size_t column(const std::string &name) const;
    std::optional<std::string> meta(const std::string &key) const;
};

/// 12 significant digits, exponent form.
std::string format_number(double x);

/// The value a reader recovers from format_number(x).
double quantize(double x);

void write_csv(std::ostream &out, const CsvTable &table);
std::string to_csv_string(const CsvTable &table);

/// Throws InvalidInput on malformed input (missing header, ragged rows,
/// non-numeric cells).
CsvTable read_csv(std::istream &in);
CsvTable read_csv_file(const std::string &path);
void write_csv_file(const std::string &path, const CsvTable &table);

}  // namespace qipflow

#endif
