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

#include "cli/table.hpp"

#include "common/error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace secrecy::cli {

namespace {

const char* const kBaseColumns[] = {"metric", "case", "k", "value", "half_width", "provenance"};

void write_atomically(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError(0, "cannot open output file '" + tmp + "' for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw ConfigError(0, "failed writing output file '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ConfigError(0, "cannot move output into place at '" + path + "'");
    }
}

nlohmann::ordered_json row_json(const Table& t, const Row& r)
{
    nlohmann::ordered_json j;
    j["metric"] = r.metric;
    j["case"] = r.which;
    j["k"] = r.k;
    j["value"] = nlohmann::ordered_json::parse(format_value(r.estimate.value));
    j["half_width"] = nlohmann::ordered_json::parse(format_value(r.estimate.half_width));
    j["provenance"] = montecarlo::to_string(r.estimate.provenance);
    for (std::size_t i = 0; i < t.extra_columns.size(); ++i) {
        const auto& v = r.extra.at(i);
        // Numeric extras stay numeric in JSON.
        const auto parsed = nlohmann::ordered_json::parse(v, nullptr, false);
        j[t.extra_columns[i]] = parsed.is_number() ? parsed : nlohmann::ordered_json(v);
    }
    return j;
}

} // namespace

std::string format_value(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const Table& t)
{
    std::string out;
    bool first = true;
    for (const char* c : kBaseColumns) {
        out += first ? "" : ",";
        out += c;
        first = false;
    }
    for (const auto& c : t.extra_columns) out += "," + c;
    out += "\n";
    for (const auto& r : t.rows) {
        out += r.metric + "," + r.which + "," + std::to_string(r.k) + "," + format_value(r.estimate.value) + "," +
               format_value(r.estimate.half_width) + "," + std::string(montecarlo::to_string(r.estimate.provenance));
        for (const auto& e : r.extra) out += "," + e;
        out += "\n";
    }
    return out;
}

std::string to_json(const Table& t)
{
    nlohmann::ordered_json j;
    j["config"] = t.config;
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const char* c : kBaseColumns) cols.push_back(c);
    for (const auto& c : t.extra_columns) cols.push_back(c);
    j["columns"] = cols;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) j["rows"].push_back(row_json(t, r));
    return j.dump(2) + "\n";
}

void write_table(const Table& t, const std::string& path, Format format)
{
    const std::string body = format == Format::csv ? to_csv(t) : to_json(t);
    if (path.empty()) {
        std::cout << body;
        std::cout.flush();
        return;
    }
    if (format == Format::csv) write_atomically(path + ".config.json", t.config.dump(2) + "\n");
    write_atomically(path, body);
}

} // namespace secrecy::cli
