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

#include "g2orbit/orbitfn.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace g2orbit {
namespace {

// exp(2 pi i t), with t reduced mod 1 first so large weights keep precision.
std::complex<double> unit_phase(double t) {
  const double reduced = t - std::nearbyint(t);
  const double angle = 2.0 * std::numbers::pi * reduced;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

FunctionValue SignedOrbit::operator()(const Point& p) const {
  FunctionValue out{family, {0.0, 0.0}, admissible};
  if (!admissible) return out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double t = static_cast<double>(alpha[i].c1) * p.x1 +
                     static_cast<double>(alpha[i].c2) * p.x2;
    out.value += static_cast<double>(signs[i]) * unit_phase(t);
  }
  return out;
}

SignedOrbit signed_orbit(Family f, Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("orbit function needs a dominant weight");
  SignedOrbit out;
  out.family = f;
  out.dominant = lambda;
  out.admissible = is_admissible(f, lambda);
  if (!out.admissible) return out;
  out.weights = weyl_orbit(lambda);
  out.signs.reserve(out.weights.size());
  out.alpha.reserve(out.weights.size());
  for (const Weight& mu : out.weights) {
    out.signs.push_back(orbit_sign(f, mu, lambda));
    out.alpha.push_back(omega_to_alpha(mu));
  }
  return out;
}

FunctionValue evaluate(Family f, Weight lambda, const Point& p) {
  return signed_orbit(f, lambda)(p);
}

double evaluate_real(Family f, Weight lambda, const Point& p) {
  return evaluate(f, lambda, p).real();
}

Family denominator_family(CharVariant v) {
  switch (v) {
    case CharVariant::full: return Family::S;
    case CharVariant::long_roots: return Family::SL;
    case CharVariant::short_roots: return Family::SS;
  }
  return Family::S;
}

Weight denominator_weight(CharVariant v) {
  switch (v) {
    case CharVariant::full: return kRho;
    case CharVariant::long_roots: return kRhoLong;
    case CharVariant::short_roots: return kRhoShort;
  }
  return kRho;
}

std::string to_string(CharVariant v) {
  switch (v) {
    case CharVariant::full: return "full";
    case CharVariant::long_roots: return "L";
    case CharVariant::short_roots: return "S";
  }
  return "?";
}

CharVariant parse_char_variant(std::string_view text) {
  std::string key;
  for (char c : text) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "full" || key == "chi") return CharVariant::full;
  if (key == "l" || key == "long") return CharVariant::long_roots;
  if (key == "s" || key == "short") return CharVariant::short_roots;
  throw std::invalid_argument("unknown character variant '" + std::string(text) + "'");
}

double character(CharVariant v, Weight lambda, const Point& p, double guard) {
  if (!lambda.dominant()) throw std::invalid_argument("character needs a dominant weight");
  const Family f = denominator_family(v);
  const Weight rho = denominator_weight(v);
  const std::complex<double> den = evaluate(f, rho, p).value;
  if (std::abs(den) <= guard) {
    throw SingularPointError("character: denominator vanishes at this point");
  }
  return (evaluate(f, lambda + rho, p).value / den).real();
}

BigInt dimension(Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("dimension needs a dominant weight");
  const BigInt a = lambda.a;
  const BigInt b = lambda.b;
  BigInt n = (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) * (3 * a + b + 4) *
             (3 * a + 2 * b + 5);
  return n / 120;
}

Parity boundary_parity(Family f, Wall w) {
  // The affine mirror is a conjugate of the long-root reflection r1.
  const Reflection r = w == Wall::r2 ? Reflection::r2 : Reflection::r1;
  return sigma(f, r) < 0 ? Parity::antisymmetric : Parity::symmetric;
}

Point reflect_across(Wall w, const Point& p) {
  switch (w) {
    case Wall::r1: return reflect(Reflection::r1, p);
    case Wall::r2: return reflect(Reflection::r2, p);
    case Wall::affine: return affine_reflect(p);
  }
  return p;
}

Point wall_normal(Wall w) {
  // Co-root directions: alpha-check_1, alpha-check_2, and the highest root.
  Point n;
  switch (w) {
    case Wall::r1: n = {2.0, -1.0}; break;
    case Wall::r2: n = {-3.0, 2.0}; break;
    case Wall::affine: n = {1.0, 0.0}; break;
  }
  const double len2 = kCoweightGram[0][0] * n.x1 * n.x1 + 2 * kCoweightGram[0][1] * n.x1 * n.x2 +
                      kCoweightGram[1][1] * n.x2 * n.x2;
  const double len = std::sqrt(len2);
  return {n.x1 / len, n.x2 / len};
}

}  // namespace g2orbit
