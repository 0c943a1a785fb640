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
#include "cli/table.hpp"

#include <string>

namespace secrecy::cli {

enum ExitCode { exit_success = 0, exit_validation_failure = 1, exit_config_error = 2, exit_numeric_error = 3 };

/// Computes the table a spec describes. `passed` is cleared when a
/// validation check fails. Throws the library's exceptions.
Table build_table(const RunSpec& spec, bool& passed);

/// Figure tables (fig2..fig11) at the spec's Monte Carlo settings.
Table build_figure(const RunSpec& spec);

/// Finalizes, computes and writes the outputs. Never throws; returns the
/// exit code and puts any diagnostic into `message`.
int run(RunSpec spec, std::string& message);

} // namespace secrecy::cli
