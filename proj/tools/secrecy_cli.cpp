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

#include "secrecy/secrecy.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

namespace {

constexpr int kConfigError = 2;

struct RunDeleter {
    void operator()(secrecy_run* r) const { secrecy_run_destroy(r); }
};

int report(const char* what)
{
    std::cerr << "secrecy: " << what << "\n";
    return kConfigError;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy metrics of Poisson MIMO networks over alpha-mu fading"};
    app.require_subcommand(1, 1);

    std::string config_path, out_path, format, figure;
    std::string seed, trials, workers;
    const std::pair<const char*, const char*> commands[] = {
        {"eval", "Evaluate one metric at one scenario"},
        {"sweep", "Evaluate one metric over a parameter grid"},
        {"validate", "Compare closed forms with quadrature and Monte Carlo"},
        {"figure", "Emit the data table of a reproduced figure"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "Scenario document")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "Output file (stdout if omitted)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "Monte Carlo master seed");
        sub->add_option("--trials", trials, "Monte Carlo realizations");
        sub->add_option("--workers", workers, "Worker threads (results do not depend on it)");
        if (std::string(name) == "figure") sub->add_option("figure_id,--figure", figure, "fig2..fig11");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (config_path.empty() && command != "figure") return report("--config is required");

    std::string text;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) return report(("cannot read " + config_path).c_str());
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    secrecy_run* raw = nullptr;
    if (secrecy_run_parse(text.c_str(), &raw) != SECRECY_OK) return report(secrecy_last_error());
    std::unique_ptr<secrecy_run, RunDeleter> run(raw);
    const std::pair<const char*, const std::string*> overrides[] = {
        {"command", &command}, {"figure", &figure}, {"out", &out_path}, {"format", &format},
        {"seed", &seed},       {"trials", &trials}, {"workers", &workers},
    };
    for (const auto& [option, value] : overrides) {
        if (value->empty()) continue;
        if (secrecy_run_set(run.get(), option, value->c_str()) != SECRECY_OK) return report(secrecy_last_error());
    }
    int exit_code = 0;
    if (secrecy_run_execute(run.get(), &exit_code) != SECRECY_OK) return report(secrecy_last_error());
    if (exit_code != 0) std::cerr << "secrecy: " << secrecy_last_error() << "\n";
    return exit_code;
}
