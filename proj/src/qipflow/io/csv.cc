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

#include "qipflow/io/csv.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

}  // namespace

size_t CsvTable::column(const std::string &name) const {
    for (size_t k = 0; k < header.size(); ++k) {
        if (header[k] == name) {
            return k;
        }
    }
    throw InvalidInput("csv: missing column '" + name + "'");
}

std::optional<std::string> CsvTable::meta(const std::string &key) const {
    for (const auto &[k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

std::string format_number(double x) {
    if (x == 0) {
        x = 0;  // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

double quantize(double x) {
    return std::strtod(format_number(x).c_str(), nullptr);
}

void write_csv(std::ostream &out, const CsvTable &table) {
    for (const auto &[k, v] : table.metadata) {
        out << "# " << k << "=" << v << "\n";
    }
    for (size_t k = 0; k < table.header.size(); ++k) {
        out << (k ? "," : "") << table.header[k];
    }
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "") << format_number(row[k]);
        }
        out << "\n";
    }
}

std::string to_csv_string(const CsvTable &table) {
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
}

CsvTable read_csv(std::istream &in) {
    CsvTable table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (t[0] == '#') {
            std::string body = trim(t.substr(1));
            size_t eq = body.find('=');
            if (eq != std::string::npos) {
                table.metadata.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
            }
            continue;
        }
        if (table.header.empty()) {
            table.header = split(t);
            continue;
        }
        auto cells = split(t);
        if (cells.size() != table.header.size()) {
            throw InvalidInput("csv line " + std::to_string(lineno) + ": expected " +
                               std::to_string(table.header.size()) + " cells, got " + std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &c : cells) {
            char *end = nullptr;
            double v = std::strtod(c.c_str(), &end);
            if (c.empty() || end != c.c_str() + c.size() || !std::isfinite(v)) {
                throw InvalidInput("csv line " + std::to_string(lineno) + ": bad number '" + c + "'");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) {
        throw InvalidInput("csv: missing header row");
    }
    return table;
}

CsvTable read_csv_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    return read_csv(in);
}

void write_csv_file(const std::string &path, const CsvTable &table) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write '" + path + "'");
    }
    write_csv(out, table);
}

}  // namespace qipflow
