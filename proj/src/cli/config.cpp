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

#include "cli/run_spec.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace secrecy::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& v, int line, const std::string& key)
{
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || p != end || !std::isfinite(out)) {
        throw ConfigError(line, "'" + key + "' expects a finite number, got '" + v + "'");
    }
    return out;
}

long long to_integer(const std::string& v, int line, const std::string& key)
{
    long long out = 0;
    const auto* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || p != end) {
        // Accept integral reals such as "4" written by a sweep as "4.0".
        const double d = to_double(v, line, key);
        if (d != std::floor(d) || std::abs(d) > 9.0e15) {
            throw ConfigError(line, "'" + key + "' expects an integer, got '" + v + "'");
        }
        return static_cast<long long>(d);
    }
    return out;
}

double from_db(double v) { return std::pow(10.0, v / 10.0); }

void require(bool ok, int line, const std::string& what)
{
    if (!ok) throw ConfigError(line, what);
}

double positive(const std::string& v, int line, const std::string& key)
{
    const double x = to_double(v, line, key);
    require(x > 0.0, line, "'" + key + "' must be positive (got " + v + ")");
    return x;
}

int positive_int(const std::string& v, int line, const std::string& key)
{
    const long long x = to_integer(v, line, key);
    require(x >= 1 && x <= 1000000, line, "'" + key + "' must be a positive integer (got " + v + ")");
    return static_cast<int>(x);
}

template <typename F>
auto named(F parse, std::string_view v, int line) -> decltype(parse(v))
{
    try {
        return parse(v);
    } catch (const Error& e) {
        throw ConfigError(line, e.what());
    }
}

std::vector<double> parse_list(const std::string& v, int line, const std::string& key)
{
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), line, key));
    require(!out.empty(), line, "'" + key + "' is empty");
    return out;
}

using Setter = std::function<void(RunSpec&, const std::string&, int)>;

struct KeyTable {
    // section -> key -> setter
    std::map<std::string, std::map<std::string, Setter>> sections;
};

void add_fading(KeyTable& t, const std::string& section, FadingSpec ScenarioFields::*member)
{
    auto& s = t.sections[section];
    s["alpha"] = [=](RunSpec& r, const std::string& v, int l) {
        (r.scenario.*member).alpha = positive(v, l, section + ".alpha");
    };
    s["mu"] = [=](RunSpec& r, const std::string& v, int l) {
        (r.scenario.*member).mu = positive(v, l, section + ".mu");
    };
    s["omega"] = [=](RunSpec& r, const std::string& v, int l) {
        (r.scenario.*member).omega = positive(v, l, section + ".omega");
    };
}

const KeyTable& keys()
{
    static const KeyTable table = [] {
        KeyTable t;
        auto& g = t.sections["geometry"];
        g["d"] = [](RunSpec& r, const std::string& v, int l) {
            r.scenario.d = positive_int(v, l, "d");
            require(r.scenario.d <= 8, l, "'d' must not exceed 8");
        };
        g["upsilon"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.upsilon = positive(v, l, "upsilon"); };
        g["lambda_b"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.lambda_b = positive(v, l, "lambda_b"); };
        g["lambda_e"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.lambda_e = positive(v, l, "lambda_e"); };

        add_fading(t, "fading_b", &ScenarioFields::fading_b);
        add_fading(t, "fading_e", &ScenarioFields::fading_e);

        auto& s = t.sections["scenario"];
        s["n_a"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.n_a = positive_int(v, l, "n_a"); };
        s["n_b"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.n_b = positive_int(v, l, "n_b"); };
        s["n_e"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.n_e = positive_int(v, l, "n_e"); };
        s["eta_k"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.eta_k = positive(v, l, "eta_k"); };
        s["eta_e"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.eta_e = positive(v, l, "eta_e"); };
        s["varpi"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.varpi = positive(v, l, "varpi"); };
        s["eta_k_db"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.eta_k = from_db(to_double(v, l, "eta_k_db")); };
        s["eta_e_db"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.eta_e = from_db(to_double(v, l, "eta_e_db")); };
        s["varpi_db"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.varpi = from_db(to_double(v, l, "varpi_db")); };
        s["rate"] = [](RunSpec& r, const std::string& v, int l) {
            r.scenario.rate = to_double(v, l, "rate");
            require(r.scenario.rate >= 0.0, l, "'rate' must be non-negative (got " + v + ")");
        };
        s["k"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.k = positive_int(v, l, "k"); };
        s["ordering"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.ordering = named(metrics::parse_ordering, v, l); };
        s["eavesdropper"] = [](RunSpec& r, const std::string& v, int l) { r.scenario.eavesdropper = named(metrics::parse_ordering, v, l); };
        s["tau"] = [](RunSpec& r, const std::string& v, int l) {
            const double tau = to_double(v, l, "tau");
            require(tau > 0.0 && tau < 1.0, l, "'tau' must lie in (0, 1) (got " + v + ")");
            r.scenario.tau = tau;
        };

        auto& m = t.sections["mc"];
        m["trials"] = [](RunSpec& r, const std::string& v, int l) {
            const long long n = to_integer(v, l, "trials");
            require(n >= 1, l, "'trials' must be at least 1 (got " + v + ")");
            r.mc.trials = static_cast<std::uint64_t>(n);
            r.trials_given = true;
        };
        m["seed"] = [](RunSpec& r, const std::string& v, int l) {
            std::uint64_t seed = 0;
            const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
            require(ec == std::errc() && p == v.data() + v.size(), l, "'seed' expects an unsigned 64-bit integer, got '" + v + "'");
            r.mc.master_seed = seed;
        };
        m["window_radius"] = [](RunSpec& r, const std::string& v, int l) {
            r.mc.window_radius = to_double(v, l, "window_radius");
            require(r.mc.window_radius >= 0.0, l, "'window_radius' must be non-negative (0 selects it automatically)");
            r.window_given = true;
        };
        m["workers"] = [](RunSpec& r, const std::string& v, int l) { r.mc.worker_hint = positive_int(v, l, "workers"); };
        m["ci_level"] = [](RunSpec& r, const std::string& v, int l) {
            r.mc.ci_level = to_double(v, l, "ci_level");
            require(r.mc.ci_level > 0.0 && r.mc.ci_level < 1.0, l, "'ci_level' must lie in (0, 1)");
        };

        auto& run = t.sections["run"];
        run["command"] = [](RunSpec& r, const std::string& v, int l) { r.command = named(parse_command, v, l); };
        run["figure"] = [](RunSpec& r, const std::string& v, int) { r.figure = v; };
        run["metric"] = [](RunSpec& r, const std::string& v, int l) { r.metric = named(parse_output_metric, v, l); };
        run["case"] = [](RunSpec& r, const std::string& v, int l) { r.which = named(metrics::parse_case, v, l); };
        run["method"] = [](RunSpec& r, const std::string& v, int l) { r.method = named(parse_method, v, l); };
        run["simulate"] = [](RunSpec& r, const std::string& v, int l) {
            require(v == "true" || v == "false", l, "'simulate' expects true or false");
            r.simulate = v == "true";
        };
        run["format"] = [](RunSpec& r, const std::string& v, int l) { r.format = named(parse_format, v, l); };
        run["out"] = [](RunSpec& r, const std::string& v, int) { r.output_path = v; };
        run["sweep_param"] = [](RunSpec& r, const std::string& v, int) {
            if (!r.sweep) r.sweep = SweepAxis{};
            r.sweep->name = v;
        };
        run["sweep_values"] = [](RunSpec& r, const std::string& v, int l) {
            if (!r.sweep) r.sweep = SweepAxis{};
            r.sweep->values = parse_list(v, l, "sweep_values");
        };
        run["sweep_range"] = [](RunSpec& r, const std::string& v, int l) {
            const auto p = parse_list(v, l, "sweep_range");
            require(p.size() == 3, l, "'sweep_range' expects start, stop, count");
            const double count = p[2];
            require(count >= 1 && count == std::floor(count) && count <= 1e6, l, "'sweep_range' count must be a positive integer");
            if (!r.sweep) r.sweep = SweepAxis{};
            r.sweep->values.clear();
            const int n = static_cast<int>(count);
            for (int i = 0; i < n; ++i) r.sweep->values.push_back(n == 1 ? p[0] : p[0] + (p[1] - p[0]) * i / (n - 1));
        };
        return t;
    }();
    return table;
}

// Resolves "key" or "section.key" to its setter.
std::pair<std::string, const Setter*> find_key(std::string_view name)
{
    const auto& t = keys().sections;
    const auto dot = name.find('.');
    if (dot != std::string_view::npos) {
        const auto sec = t.find(std::string(name.substr(0, dot)));
        if (sec == t.end()) return {{}, nullptr};
        const auto it = sec->second.find(std::string(name.substr(dot + 1)));
        if (it == sec->second.end()) return {{}, nullptr};
        return {std::string(name), &it->second};
    }
    std::pair<std::string, const Setter*> hit{{}, nullptr};
    int hits = 0;
    for (const auto& [sec, entries] : t) {
        const auto it = entries.find(std::string(name));
        if (it != entries.end()) {
            hit = {sec + "." + std::string(name), &it->second};
            ++hits;
        }
    }
    if (hits > 1) throw ConfigError(0, "parameter '" + std::string(name) + "' is ambiguous; qualify it as section.key");
    return hit;
}

bool sweepable(const std::string& qualified)
{
    return qualified.rfind("run.", 0) != 0 && qualified != "scenario.ordering" &&
           qualified != "scenario.eavesdropper";
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string_view to_string(Command c)
{
    switch (c) {
    case Command::eval: return "eval";
    case Command::sweep: return "sweep";
    case Command::validate: return "validate";
    case Command::figure: return "figure";
    }
    return "?";
}

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

std::string_view to_string(OutputMetric m)
{
    switch (m) {
    case OutputMetric::cop: return "cop";
    case OutputMetric::pnz: return "pnz";
    case OutputMetric::capacity: return "capacity";
    case OutputMetric::wiretap_capacity: return "wiretap_capacity";
    case OutputMetric::ergodic_secrecy: return "ergodic_secrecy";
    case OutputMetric::kstar: return "kstar";
    }
    return "?";
}

Command parse_command(std::string_view s)
{
    for (Command c : {Command::eval, Command::sweep, Command::validate, Command::figure}) {
        if (s == to_string(c)) return c;
    }
    throw ConfigError(0, "unknown command '" + std::string(s) + "' (expected eval, sweep, validate or figure)");
}

Format parse_format(std::string_view s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw ConfigError(0, "unknown format '" + std::string(s) + "' (expected csv or json)");
}

Method parse_method(std::string_view s)
{
    for (Method m : {Method::closed_form, Method::quadrature, Method::monte_carlo}) {
        if (s == to_string(m)) return m;
    }
    throw ConfigError(0, "unknown method '" + std::string(s) + "' (expected closed-form, quadrature or monte-carlo)");
}

OutputMetric parse_output_metric(std::string_view s)
{
    for (OutputMetric m : {OutputMetric::cop, OutputMetric::pnz, OutputMetric::capacity, OutputMetric::wiretap_capacity,
                           OutputMetric::ergodic_secrecy, OutputMetric::kstar}) {
        if (s == to_string(m)) return m;
    }
    throw ConfigError(0, "unknown metric '" + std::string(s) + "'");
}

std::vector<std::string> supported_figures()
{
    std::vector<std::string> out;
    for (int i = 2; i <= 11; ++i) out.push_back("fig" + std::to_string(i));
    return out;
}

RunSpec parse_config(std::string_view text)
{
    RunSpec spec;
    spec.mc.worker_hint = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto& table = keys().sections;
    std::string section;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto comment = s.find_first_of("#;");
        if (comment != std::string::npos) s.erase(comment);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            require(s.back() == ']', line, "malformed section header '" + s + "'");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            require(table.count(section) == 1, line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        require(eq != std::string::npos, line, "expected 'key = value', got '" + s + "'");
        require(!section.empty(), line, "key outside of any section");
        const std::string key = trim(std::string_view(s).substr(0, eq));
        const std::string value = trim(std::string_view(s).substr(eq + 1));
        const auto& entries = table.at(section);
        const auto it = entries.find(key);
        require(it != entries.end(), line, "unknown key '" + key + "' in [" + section + "]");
        require(!value.empty(), line, "key '" + key + "' has no value");
        require(seen.insert(section + "." + key).second, line, "duplicate key '" + key + "' in [" + section + "]");
        it->second(spec, value, line);
    }
    for (const char* pair : {"eta_k", "eta_e", "varpi"}) {
        const std::string lin = std::string("scenario.") + pair;
        require(!(seen.count(lin) && seen.count(lin + "_db")), 0,
                std::string("'") + pair + "' and '" + pair + "_db' are both set");
    }
    require(!(spec.scenario.eta_e && spec.scenario.varpi), 0, "set at most one of eta_e and varpi");
    if (spec.command) finalize(spec);
    return spec;
}

void finalize(RunSpec& spec)
{
    const Command cmd = spec.command.value_or(Command::eval);
    spec.command = cmd;
    if (cmd == Command::sweep) {
        require(spec.sweep.has_value(), 0, "the sweep command requires [run] sweep_param and sweep_values or sweep_range");
        require(!spec.sweep->name.empty(), 0, "missing required key [run] sweep_param");
        require(!spec.sweep->values.empty(), 0, "missing required key [run] sweep_values or sweep_range");
        const auto [qualified, setter] = find_key(spec.sweep->name);
        require(setter != nullptr && sweepable(qualified), 0,
                "sweep_param '" + spec.sweep->name + "' does not name a scenario or Monte Carlo field");
    } else {
        require(!spec.sweep.has_value(), 0, "sweep_param, sweep_values and sweep_range are only valid for the sweep command");
    }
    if (cmd == Command::figure) {
        require(spec.figure.has_value(), 0, "the figure command requires a figure identifier (fig2..fig11)");
        const auto figs = supported_figures();
        require(std::find(figs.begin(), figs.end(), *spec.figure) != figs.end(), 0,
                "unknown figure '" + *spec.figure + "' (supported: fig2..fig11)");
        return;
    }
    if (spec.metric == OutputMetric::kstar) {
        require(spec.scenario.tau.has_value(), 0, "metric kstar requires [scenario] tau");
        require(spec.method == Method::closed_form, 0, "metric kstar is only available in closed form");
    }
    // Derive once to surface missing keys and violated invariants early.
    to_inputs(spec.scenario);
}

void apply_parameter(RunSpec& spec, std::string_view name, double value)
{
    const auto [qualified, setter] = find_key(name);
    if (setter == nullptr || !sweepable(qualified)) {
        throw ConfigError(0, "parameter '" + std::string(name) + "' does not name a scenario or Monte Carlo field");
    }
    // eta_e and varpi are alternative ways to set the same quantity.
    if (qualified.rfind("scenario.varpi", 0) == 0) spec.scenario.eta_e.reset();
    if (qualified.rfind("scenario.eta_e", 0) == 0) spec.scenario.varpi.reset();
    (*setter)(spec, format_number(value), 0);
}

metrics::ScenarioInputs to_inputs(const ScenarioFields& f)
{
    require(f.lambda_b.has_value(), 0, "missing required key [geometry] lambda_b");
    require(f.lambda_e.has_value(), 0, "missing required key [geometry] lambda_e");
    require(f.eta_k.has_value(), 0, "missing required key [scenario] eta_k (or eta_k_db)");
    metrics::ScenarioInputs in;
    in.d = f.d;
    in.upsilon = f.upsilon;
    in.lambda_b = *f.lambda_b;
    in.lambda_e = *f.lambda_e;
    auto link = [](const FadingSpec& s) {
        return s.omega ? fading::AlphaMuParams(s.alpha, s.mu, *s.omega) : fading::AlphaMuParams::canonical(s.alpha, s.mu);
    };
    try {
        in.link_b = link(f.fading_b);
        in.link_e = link(f.fading_e);
    } catch (const DomainError& e) {
        throw ConfigError(0, e.what());
    }
    in.n_a = f.n_a;
    in.n_b = f.n_b;
    in.n_e = f.n_e;
    in.eta_k = *f.eta_k;
    in.eta_e = f.eta_e ? *f.eta_e : (f.varpi ? *f.eta_k / *f.varpi : *f.eta_k);
    in.rate = f.rate;
    in.k = f.k;
    in.ordering = f.ordering;
    in.eavesdropper_policy = f.eavesdropper;
    return in;
}

} // namespace secrecy::cli
