/*
   Copyright 2026 The secrecy-mimo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "cli/run_spec.hpp"
#include "montecarlo/estimate.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace secrecy::cli {

struct Row {
    std::string metric;
    std::string which; // case or ordering
    int k = 1;
    montecarlo::MetricEstimate estimate;
    /// One entry per Table::extra_columns.
    std::vector<std::string> extra;
};

struct Table {
    std::vector<std::string> extra_columns;
    std::vector<Row> rows;
    /// Fully resolved parameter set.
    nlohmann::ordered_json config;
};

/// 12 significant digits, the serialization used by every output.
std::string format_value(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Writes the table (and, for CSV, a "<path>.config.json" sidecar) through a
/// temporary file renamed into place, so a failed run leaves no partial
/// output. An empty path writes the table to stdout.
void write_table(const Table& t, const std::string& path, Format format);

} // namespace secrecy::cli
