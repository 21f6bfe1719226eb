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

#include "g2orbit/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace g2orbit {
namespace {

Rational floor_of(const Rational& r) {
  // boost::rational keeps the denominator positive.
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return Rational(q);
}

// Upper bound on reflection steps after translation into the unit square.
constexpr int kMaxFoldSteps = 64;

template <typename T, typename FloorFn, typename Less>
BasicPoint<T> fold_impl(BasicPoint<T> p, FloorFn floor_fn, Less less) {
  // The co-root lattice is Z^2 in omega-check coordinates (determinant 1).
  p.x1 = p.x1 - floor_fn(p.x1);
  p.x2 = p.x2 - floor_fn(p.x2);
  for (int step = 0; step < kMaxFoldSteps; ++step) {
    if (less(p.x1, T(0))) {
      p = reflect(Reflection::r1, p);
    } else if (less(p.x2, T(0))) {
      p = reflect(Reflection::r2, p);
    } else if (less(T(1), 2 * p.x1 + 3 * p.x2)) {
      p = affine_reflect(p);
    } else {
      return p;
    }
  }
  throw std::logic_error("fold_to_F did not converge");
}

}  // namespace

Point to_real(const RationalPoint& p) {
  return {boost::rational_cast<double>(p.x1), boost::rational_cast<double>(p.x2)};
}

AlphaCoords omega_to_alpha(Weight w) { return {2 * w.a + w.b, 3 * w.a + 2 * w.b}; }

Weight alpha_to_omega(AlphaCoords c) { return {2 * c.c1 - c.c2, -3 * c.c1 + 2 * c.c2}; }

double pairing(Weight w, const Point& p) {
  const AlphaCoords c = omega_to_alpha(w);
  return static_cast<double>(c.c1) * p.x1 + static_cast<double>(c.c2) * p.x2;
}

Rational pairing(Weight w, const RationalPoint& p) {
  const AlphaCoords c = omega_to_alpha(w);
  return c.c1 * p.x1 + c.c2 * p.x2;
}

Weight reflect(Reflection r, Weight w) {
  if (r == Reflection::r1) return {-w.a, 3 * w.a + w.b};
  return {w.a + w.b, -w.b};
}

bool in_fundamental_domain(const RationalPoint& p) {
  const Rational zero(0);
  return p.x1 >= zero && p.x2 >= zero && Rational(2) * p.x1 + Rational(3) * p.x2 <= Rational(1);
}

bool in_fundamental_domain(const Point& p, double tol) {
  return p.x1 >= -tol && p.x2 >= -tol && 2 * p.x1 + 3 * p.x2 <= 1 + tol;
}

std::vector<Weight> weyl_orbit(Weight w) {
  std::vector<Weight> orbit{w};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Reflection r : {Reflection::r1, Reflection::r2}) {
      const Weight image = reflect(r, orbit[i]);
      if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
    }
  }
  return orbit;
}

namespace {

SignedWeight dominantize_path(Family f, Weight w) {
  int sign = 1;
  while (!w.dominant()) {
    const Reflection r = w.a < 0 ? Reflection::r1 : Reflection::r2;
    w = reflect(r, w);
    sign *= sigma(f, r);
  }
  return {w, sign};
}

}  // namespace

int orbit_sign(Family f, Weight mu, Weight lambda) {
  if (!lambda.dominant()) {
    throw std::invalid_argument("orbit_sign: lambda must be dominant");
  }
  const SignedWeight path = dominantize_path(f, mu);
  if (path.weight != lambda) {
    throw std::domain_error("orbit_sign: weight is not in the orbit of lambda");
  }
  return path.sign;
}

SignedWeight dominantize(Family f, Weight w) {
  SignedWeight out = dominantize_path(f, w);
  if (!is_admissible(f, out.weight)) out.sign = 0;
  return out;
}

bool is_admissible(Family f, Weight dominant) {
  if (dominant.a == 0 && sigma(f, Reflection::r1) < 0) return false;
  if (dominant.b == 0 && sigma(f, Reflection::r2) < 0) return false;
  return true;
}

Point fold_to_F(const Point& p) {
  return fold_impl(
      p, [](double x) { return std::floor(x); }, [](double u, double v) { return u < v; });
}

RationalPoint fold_to_F(const RationalPoint& p) {
  return fold_impl(
      p, [](const Rational& x) { return floor_of(x); },
      [](const Rational& u, const Rational& v) { return u < v; });
}

}  // namespace g2orbit
