/*
 * Copyright 2026 The g2orbit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "g2orbit/transforms.hpp"

namespace g2orbit::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

struct Config {
  std::string format = "text";  // json | csv | text | latex
  std::uint64_t seed = 1;
  int quad_order = kDefaultQuadratureOrder;
  double tol = 1e-9;
};

/// Parses a coordinate given as a decimal ("0.25") or a fraction ("1/6").
/// Throws std::invalid_argument on anything else.
double parse_coordinate(const std::string& text);

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2orbit::cli
