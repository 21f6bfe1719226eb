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

#include "g2orbit/arith.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "g2orbit/algebra.hpp"

namespace g2orbit {
namespace {

constexpr double kIntegerTolerance = 1e-8;

long long to_integer(double v, const std::string& what) {
  const double r = std::round(v);
  if (std::abs(v - r) > kIntegerTolerance) {
    throw std::logic_error("rational_table: " + what + " is not an integer (" +
                           std::to_string(v) + ")");
  }
  return static_cast<long long>(r);
}

}  // namespace

FiniteOrderElement FiniteOrderElement::make(const KacPoint& kac) {
  if (std::gcd(std::gcd(kac.s0, kac.s1), kac.s2) != 1) {
    throw std::invalid_argument("element of finite order needs coprime Kac coordinates");
  }
  return {kac};
}

std::vector<FiniteOrderElement> enumerate_efo(int M) {
  std::vector<FiniteOrderElement> out;
  const Grid grid(M);
  for (const KacPoint& s : grid.points()) {
    if (std::gcd(std::gcd(s.s0, s.s1), s.s2) == 1) out.push_back({s});
  }
  return out;
}

KacPoint power_class(const FiniteOrderElement& e, int k) {
  if (k < 1) throw std::invalid_argument("power_class: exponent must be >= 1");
  const RationalPoint x = e.kac.point();
  return kac_from_point(fold_to_F(RationalPoint{k * x.x1, k * x.x2}));
}

bool is_rational(const FiniteOrderElement& e) {
  const int M = e.order();
  for (int k = 1; k < M; ++k) {
    if (std::gcd(k, M) == 1 && power_class(e, k) != e.kac) return false;
  }
  return true;
}

std::vector<FiniteOrderElement> rational_elements(int max_order) {
  std::vector<FiniteOrderElement> out;
  for (int M = 1; M <= max_order; ++M) {
    for (const FiniteOrderElement& e : enumerate_efo(M)) {
      if (is_rational(e)) out.push_back(e);
    }
  }
  return out;
}

std::string RationalTable::to_csv() const {
  std::ostringstream os;
  os << "M";
  for (const auto& c : columns) os << ',' << c.order();
  os << "\nkac";
  for (const auto& c : columns) os << ",\"[" << c.kac.s0 << ',' << c.kac.s1 << ',' << c.kac.s2 << "]\"";
  os << '\n';
  for (const Row& row : rows) {
    os << '"' << row.label << '"';
    for (long long v : row.values) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

RationalTable rational_table() {
  RationalTable table;
  table.columns = rational_elements(12);

  const Weight low[] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {0, 3}};
  for (Weight w : low) {
    RationalTable::Row row{term_label(Family::C, w), {}};
    const SignedOrbit orbit = signed_orbit(Family::C, w);
    for (const auto& c : table.columns) {
      row.values.push_back(to_integer(orbit.real(c.kac.real_point()), row.label));
    }
    table.rows.push_back(std::move(row));
  }

  const std::pair<CharVariant, const char*> variants[] = {
      {CharVariant::full, "chi"}, {CharVariant::long_roots, "chiL"}, {CharVariant::short_roots, "chiS"}};
  for (const auto& [variant, name] : variants) {
    for (Weight w : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
      RationalTable::Row row{std::string(name) + "(" + std::to_string(w.a) + "," +
                                 std::to_string(w.b) + ")",
                             {}};
      const OrbitSum expansion = expand_char_in_C(variant, w);
      for (const auto& c : table.columns) {
        row.values.push_back(
            to_integer(expansion.evaluate(c.kac.real_point()).real(), row.label));
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::vector<RationalPoint> search_integer_points(Family f, const std::vector<Weight>& weights,
                                                 int denominator_bound, double tol) {
  std::vector<SignedOrbit> functions;
  for (Weight w : weights) functions.push_back(signed_orbit(f, w));
  std::vector<RationalPoint> out;
  for (int M = 1; M <= denominator_bound; ++M) {
    for (const FiniteOrderElement& e : enumerate_efo(M)) {
      const Point p = e.kac.real_point();
      bool all_integer = true;
      for (const SignedOrbit& x : functions) {
        const double v = x.real(p);
        if (std::abs(v - std::round(v)) > tol) {
          all_integer = false;
          break;
        }
      }
      if (all_integer) out.push_back(e.kac.point());
    }
  }
  return out;
}

}  // namespace g2orbit
