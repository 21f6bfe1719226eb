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

#include <array>
#include <string>
#include <string_view>

namespace g2orbit {

/// Simple reflections of W(G2). r1 is the long-root reflection, r2 the
/// short-root one.
enum class Reflection { r1, r2 };

/// The four sign homomorphisms W(G2) -> {+1,-1}, identified by the images of
/// the two generators.
enum class Family { C, S, SL, SS };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::C, Family::S, Family::SL,
                                                       Family::SS};

constexpr int sigma(Family f, Reflection r) {
  switch (f) {
    case Family::C: return 1;
    case Family::S: return -1;
    case Family::SL: return r == Reflection::r1 ? -1 : 1;
    case Family::SS: return r == Reflection::r1 ? 1 : -1;
  }
  return 1;
}

/// Family whose signs are the componentwise product of the arguments' signs.
/// The four families form the group {+1,-1}^2 with C as identity.
constexpr Family family_from_signs(int sigma_r1, int sigma_r2) {
  if (sigma_r1 > 0) return sigma_r2 > 0 ? Family::C : Family::SS;
  return sigma_r2 > 0 ? Family::SL : Family::S;
}

/// True for S^L and S^S, whose orbit sums are purely imaginary.
constexpr bool is_imaginary_family(Family f) { return f == Family::SL || f == Family::SS; }

std::string to_string(Family f);

/// Accepts "C", "S", "SL", "SS" (also "S^L", "S^S"), case-insensitive.
/// Throws std::invalid_argument on anything else.
Family parse_family(std::string_view text);

}  // namespace g2orbit
