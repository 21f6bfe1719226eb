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

#include <string>
#include <string_view>

#include <json.hpp>

#include "g2orbit/algebra.hpp"
#include "g2orbit/lattice.hpp"
#include "g2orbit/transforms.hpp"

namespace g2orbit {

// JSON and CSV forms of grids, spectra, sampled fields, coefficient vectors
// and orbit sums. Readers throw std::invalid_argument on malformed input.

/// Shortest decimal form that reads back to the same double (17 significant digits).
std::string format_double(double v);

/// {"M": int, "points": [[s0,s1,s2], ...], "weights": [c_s, ...]}
nlohmann::json grid_to_json(const Grid& grid);
/// Rebuilds F_M and checks the listed points and weights against it.
Grid grid_from_json(const nlohmann::json& j);
/// Header s0,s1,s2,x1,x2,c then one row per point.
std::string grid_to_csv(const Grid& grid);

/// {"M": int, "family": "C", "entries": [[a, b, "h"], ...]}
nlohmann::json spectrum_to_json(const Spectrum& spec);
/// Header a,b,h then one row per spectrum weight.
std::string spectrum_to_csv(const Spectrum& spec);

/// {"M": int, "family": "C|S|SL|SS", "values": [...]}. Real values are plain
/// numbers, complex ones [re, im] pairs.
nlohmann::json field_to_json(const SampledField& f, Family family);
SampledField field_from_json(const nlohmann::json& j);
/// Header s0,s1,s2,x1,x2,value (plus imag when any value is complex).
std::string field_to_csv(const SampledField& f);
/// Reads the `value` (and optional `imag`) column; the row count must match F_M.
SampledField field_from_csv(std::string_view text, int M);

nlohmann::json coefficients_to_json(const CoefficientVector& d);
CoefficientVector coefficients_from_json(const nlohmann::json& j);
/// Header a,b,h,value (plus imag when any value is complex).
std::string coefficients_to_csv(const CoefficientVector& d);
CoefficientVector coefficients_from_csv(std::string_view text, Family family, int M);

/// {"family": "C", "terms": [[a, b, coeff], ...]}. Coefficients beyond 64
/// bits are written as decimal strings.
nlohmann::json orbit_sum_to_json(const OrbitSum& s);
OrbitSum orbit_sum_from_json(const nlohmann::json& j);

}  // namespace g2orbit
