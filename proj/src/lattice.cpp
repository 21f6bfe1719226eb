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

#include "g2orbit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace g2orbit {

KacPoint KacPoint::make(int s0, int s1, int s2) {
  if (s0 < 0 || s1 < 0 || s2 < 0) throw std::invalid_argument("Kac coordinates must be >= 0");
  KacPoint s{s0, s1, s2};
  if (s.level() < 1) throw std::invalid_argument("Kac level must be positive");
  return s;
}

RationalPoint KacPoint::point() const {
  const int M = level();
  return {Rational(s1, M), Rational(s2, M)};
}

Point KacPoint::real_point() const { return to_real(point()); }

KacPoint kac_from_point(const RationalPoint& p) {
  if (!in_fundamental_domain(p)) throw std::domain_error("point is outside F");
  const std::int64_t M = std::lcm(p.x1.denominator(), p.x2.denominator());
  const auto s1 = static_cast<int>(p.x1.numerator() * (M / p.x1.denominator()));
  const auto s2 = static_cast<int>(p.x2.numerator() * (M / p.x2.denominator()));
  return KacPoint::make(static_cast<int>(M) - 2 * s1 - 3 * s2, s1, s2);
}

int c_weight(const KacPoint& s) {
  const int zeros = (s.s0 == 0) + (s.s1 == 0) + (s.s2 == 0);
  if (zeros == 0) return 12;
  if (zeros == 1) return 6;
  if (s.s0 != 0) return 1;
  if (s.s1 != 0) return 3;
  return 2;
}

bool vanishes_at(Family f, const KacPoint& s) {
  const bool long_odd = sigma(f, Reflection::r1) < 0;
  const bool short_odd = sigma(f, Reflection::r2) < 0;
  // s1 = 0 is the r1 mirror, s2 = 0 the r2 mirror, s0 = 0 the affine mirror.
  return (long_odd && (s.s1 == 0 || s.s0 == 0)) || (short_odd && s.s2 == 0);
}

Grid::Grid(int M) : level_(M) {
  if (M < 1) throw std::invalid_argument("grid level must be >= 1");
  for (int s2 = 0; 3 * s2 <= M; ++s2) {
    for (int s1 = 0; 2 * s1 + 3 * s2 <= M; ++s1) {
      const KacPoint s{M - 2 * s1 - 3 * s2, s1, s2};
      points_.push_back(s);
      weights_.push_back(c_weight(s));
    }
  }
}

std::optional<std::size_t> Grid::index_of(const KacPoint& s) const {
  if (s.level() != level_) return std::nullopt;
  const auto it = std::find(points_.begin(), points_.end(), s);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

Grid grid_points(int M) { return Grid(M); }

std::int64_t grid_size(int M) {
  if (M < 1) throw std::invalid_argument("grid level must be >= 1");
  std::int64_t n = M / 3 + 1;
  for (int i = 0; i <= M / 3; ++i) n += (M - 3 * i) / 2;
  return n;
}

std::optional<std::size_t> Spectrum::index_of(Weight w) const {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const SpectrumEntry& e) { return e.weight == w; });
  if (it == entries.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

Rational norm_factor(Family f, Weight lambda, int M) {
  if (M < 1) throw std::invalid_argument("grid level must be >= 1");
  const std::int64_t a = lambda.a;
  const std::int64_t b = lambda.b;
  if (a < 0 || b < 0) return Rational(0);
  const std::int64_t slant = 3 * a + 2 * b;
  const bool generic = a > 0 && b > 0;
  switch (f) {
    case Family::C:
      if (a == 0 && b == 0) return Rational(1, 12);
      if (a == 0 && 2 * b < M) return Rational(1, 2);
      if (b == 0 && 3 * a < M) return Rational(1, 2);
      if (a == 0 && 2 * b == M) return Rational(1);
      if (b == 0 && 3 * a == M) return Rational(3, 2);
      if (generic && slant < M) return Rational(1);
      if (generic && slant == M) return Rational(2);
      return Rational(0);
    case Family::S:
      return generic && slant < M ? Rational(1) : Rational(0);
    case Family::SL:
      if (b == 0 && a > 0 && 3 * a < M) return Rational(1, 2);
      if (b == 0 && a > 0 && 3 * a == M) return Rational(3, 2);
      if (generic && slant < M) return Rational(1);
      if (generic && slant == M) return Rational(2);
      return Rational(0);
    case Family::SS:
      if (a == 0 && b > 0 && 2 * b < M) return Rational(1, 2);
      if (generic && slant < M) return Rational(1);
      return Rational(0);
  }
  return Rational(0);
}

Spectrum spectrum(Family f, int M) {
  Spectrum out;
  out.family = f;
  out.level = M;
  for (std::int64_t a = 0; 3 * a <= M; ++a) {
    for (std::int64_t b = 0; 3 * a + 2 * b <= M; ++b) {
      const Rational h = norm_factor(f, {a, b}, M);
      if (h != Rational(0)) out.entries.push_back({{a, b}, h});
    }
  }
  return out;
}

}  // namespace g2orbit
