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

// Published reference values used as expected results by the tests.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "g2orbit/family.hpp"
#include "g2orbit/orbitfn.hpp"
#include "g2orbit/rootsys.hpp"

namespace g2orbit::reference {

struct Term {
  long coefficient;
  Weight weight;
};

/// X_la * Y_lb = sum of terms of family `target`, parametrized by (a, b).
struct ProductIdentity {
  std::string name;
  Family fa;
  Family fb;
  Family target;
  bool uses_a;
  bool uses_b;
  std::function<Weight(long, long)> la;
  std::function<Weight(long, long)> lb;
  std::function<std::vector<Term>(long, long)> rhs;
};

inline std::vector<ProductIdentity> product_identities() {
  using F = Family;
  const auto ab = [](long a, long b) { return Weight{a, b}; };
  const auto a0 = [](long a, long) { return Weight{a, 0}; };
  const auto b0 = [](long, long b) { return Weight{0, b}; };
  const auto w10 = [](long, long) { return Weight{1, 0}; };
  const auto w01 = [](long, long) { return Weight{0, 1}; };
  return {
      {"C(1,0)C(1,0)", F::C, F::C, F::C, false, false, w10, w10,
       [](long, long) { return std::vector<Term>{{1, {2, 0}}, {2, {1, 0}}, {2, {0, 3}}, {6, {0, 0}}}; }},
      {"C(0,1)C(0,1)", F::C, F::C, F::C, false, false, w01, w01,
       [](long, long) { return std::vector<Term>{{1, {0, 2}}, {2, {0, 1}}, {2, {1, 0}}, {6, {0, 0}}}; }},
      {"C(0,1)C(1,0)", F::C, F::C, F::C, false, false, w01, w10,
       [](long, long) { return std::vector<Term>{{1, {1, 1}}, {2, {0, 2}}, {2, {0, 1}}}; }},
      {"C(a,b)C(a,b)", F::C, F::C, F::C, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{12, {0, 0}},          {1, {2 * a, 2 * b}},   {2, {a, b}},
                                  {2, {a + b, 0}},       {2, {a, 0}},           {2, {0, b}},
                                  {2, {2 * a + b, 0}},   {2, {b, 3 * a}},       {2, {0, 3 * a + b}},
                                  {2, {0, 3 * a + 2 * b}}};
       }},
      {"C(a,0)C(a,0)", F::C, F::C, F::C, true, false, a0, a0,
       [](long a, long) { return std::vector<Term>{{6, {0, 0}}, {1, {2 * a, 0}}, {2, {a, 0}}, {2, {0, 3 * a}}}; }},
      {"C(0,b)C(0,b)", F::C, F::C, F::C, false, true, b0, b0,
       [](long, long b) { return std::vector<Term>{{6, {0, 0}}, {1, {0, 2 * b}}, {2, {0, b}}, {2, {b, 0}}}; }},
      {"C(a,b)S(a,b)", F::C, F::S, F::S, true, true, ab, ab,
       [](long a, long b) { return std::vector<Term>{{-2, {b, 3 * a}}, {1, {2 * a, 2 * b}}, {2, {a, b}}}; }},
      {"C(a,b)SL(a,b)", F::C, F::SL, F::SL, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{1, {2 * a, 2 * b}}, {2, {2 * a + b, 0}}, {-2, {a, b}}, {-2, {a, 0}},
                                  {-2, {a + b, 0}}};
       }},
      {"C(a,0)SL(a,0)", F::C, F::SL, F::SL, true, false, a0, a0,
       [](long a, long) { return std::vector<Term>{{1, {2 * a, 0}}, {-2, {a, 0}}}; }},
      {"C(a,b)SS(a,b)", F::C, F::SS, F::SS, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{1, {2 * a, 2 * b}}, {-2, {a, b}}, {-2, {0, b}}, {-2, {0, 3 * a + b}},
                                  {2, {0, 3 * a + 2 * b}}};
       }},
      {"C(0,b)SS(0,b)", F::C, F::SS, F::SS, false, true, b0, b0,
       [](long, long b) { return std::vector<Term>{{1, {0, 2 * b}}, {-2, {0, b}}}; }},
      {"S(a,b)S(a,b)", F::S, F::S, F::C, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{12, {0, 0}},          {1, {2 * a, 2 * b}},   {2, {a, b}},
                                  {-2, {a + b, 0}},      {-2, {a, 0}},          {-2, {0, b}},
                                  {-2, {2 * a + b, 0}},  {2, {b, 3 * a}},       {-2, {0, 3 * a + b}},
                                  {-2, {0, 3 * a + 2 * b}}};
       }},
      {"S(a,b)SL(a,b)", F::S, F::SL, F::SS, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{1, {2 * a, 2 * b}}, {-2, {a, b}}, {2, {0, b}}, {2, {0, 3 * a + b}},
                                  {-2, {0, 3 * a + 2 * b}}};
       }},
      {"S(a,b)SS(a,b)", F::S, F::SS, F::SL, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{1, {2 * a, 2 * b}}, {-2, {a, b}}, {-2, {2 * a + b, 0}}, {2, {a, 0}},
                                  {2, {a + b, 0}}};
       }},
      {"SL(a,b)SL(a,b)", F::SL, F::SL, F::C, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{-12, {0, 0}},         {1, {2 * a, 2 * b}},   {2, {a, b}},
                                  {2, {a + b, 0}},       {2, {a, 0}},           {-2, {0, b}},
                                  {2, {2 * a + b, 0}},   {-2, {b, 3 * a}},      {-2, {0, 3 * a + b}},
                                  {-2, {0, 3 * a + 2 * b}}};
       }},
      {"SL(a,0)SL(a,0)", F::SL, F::SL, F::C, true, false, a0, a0,
       [](long a, long) { return std::vector<Term>{{-6, {0, 0}}, {1, {2 * a, 0}}, {2, {a, 0}}, {-2, {0, 3 * a}}}; }},
      {"SL(a,b)SS(a,b)", F::SL, F::SS, F::S, true, true, ab, ab,
       [](long a, long b) { return std::vector<Term>{{1, {2 * a, 2 * b}}, {2, {b, 3 * a}}, {2, {a, b}}}; }},
      {"SS(a,b)SS(a,b)", F::SS, F::SS, F::C, true, true, ab, ab,
       [](long a, long b) {
         return std::vector<Term>{{-12, {0, 0}},         {1, {2 * a, 2 * b}},   {2, {a, b}},
                                  {-2, {a + b, 0}},      {-2, {a, 0}},          {2, {0, b}},
                                  {-2, {2 * a + b, 0}},  {-2, {b, 3 * a}},      {2, {0, 3 * a + b}},
                                  {2, {0, 3 * a + 2 * b}}};
       }},
      {"SS(0,b)SS(0,b)", F::SS, F::SS, F::C, false, true, b0, b0,
       [](long, long b) { return std::vector<Term>{{-6, {0, 0}}, {1, {0, 2 * b}}, {2, {0, b}}, {-2, {b, 0}}}; }},
  };
}

/// Character expansions in the C basis, as printed (terms may repeat).
struct CharacterLine {
  CharVariant variant;
  Weight lambda;
  std::vector<Term> terms;
};

inline std::vector<CharacterLine> character_lines() {
  using V = CharVariant;
  return {
      {V::full, {1, 0}, {{1, {1, 0}}, {1, {0, 1}}, {2, {0, 0}}}},
      {V::long_roots, {1, 0}, {{1, {1, 0}}, {2, {0, 0}}}},
      {V::short_roots, {1, 0}, {{1, {1, 0}}, {2, {0, 1}}, {2, {0, 0}}}},
      {V::full, {0, 1}, {{1, {0, 1}}, {1, {0, 0}}}},
      {V::long_roots, {0, 1}, {{1, {0, 1}}}},
      {V::short_roots, {0, 1}, {{1, {0, 1}}, {2, {0, 0}}}},
      {V::full, {1, 1}, {{1, {1, 1}}, {2, {0, 2}}, {2, {1, 0}}, {4, {0, 1}}, {4, {0, 0}}}},
      {V::long_roots, {1, 1}, {{1, {1, 1}}, {1, {0, 2}}, {2, {0, 1}}}},
      {V::short_roots, {1, 1}, {{1, {1, 1}}, {2, {0, 2}}, {3, {1, 0}}, {4, {0, 1}}, {4, {0, 0}}}},
      {V::full, {2, 0},
       {{1, {2, 0}}, {1, {0, 3}}, {1, {1, 1}}, {2, {0, 2}}, {3, {1, 0}}, {3, {0, 1}}, {5, {0, 0}}}},
      {V::long_roots, {2, 0}, {{1, {2, 0}}, {1, {0, 3}}, {2, {1, 0}}, {3, {0, 0}}}},
      {V::short_roots, {2, 0}, {{1, {2, 0}}, {1, {1, 1}}, {2, {0, 2}}, {2, {1, 0}}, {2, {0, 1}}, {2, {0, 0}}}},
      {V::full, {0, 2}, {{1, {0, 2}}, {1, {1, 0}}, {2, {0, 1}}, {3, {0, 0}}}},
      {V::long_roots, {0, 2}, {{1, {0, 2}}, {1, {0, 1}}}},
      {V::short_roots, {0, 2}, {{1, {0, 2}}, {1, {1, 0}}, {2, {0, 1}}, {3, {0, 0}}}},
      {V::full, {0, 3}, {{1, {0, 3}}, {1, {1, 1}}, {2, {0, 2}}, {3, {1, 0}}, {4, {0, 1}}, {5, {0, 0}}}},
      {V::long_roots, {0, 3}, {{1, {0, 3}}, {2, {1, 0}}, {2, {0, 0}}}},
      {V::short_roots, {0, 3},
       {{1, {0, 3}}, {1, {0, 1}}, {1, {1, 1}}, {2, {0, 2}}, {2, {1, 0}}, {2, {0, 1}}, {4, {0, 0}}}},
  };
}

/// C_(2,1) in terms of characters, as printed. The labels there are the
/// transpose (a, b) -> (b, a) of this library's convention.
inline std::vector<Term> c21_inverse_printed() {
  return {{1, {2, 1}}, {-1, {0, 2}}, {-1, {3, 0}}, {-1, {1, 1}}, {1, {2, 0}}, {1, {0, 1}}};
}

/// Kac coordinates of the 14 rational classes, in table column order.
inline std::vector<std::array<int, 3>> rational_classes() {
  return {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {2, 1, 0}, {1, 0, 1}, {4, 1, 0},
          {3, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {1, 2, 1}, {3, 3, 1}, {1, 4, 1}};
}

struct TableRow {
  std::string label;
  std::array<long, 14> values;
};

/// Values of the lowest functions at the rational classes, as printed.
inline std::vector<TableRow> rational_table_printed() {
  return {
      {"C(1,0)", {6, -2, -3, 6, -2, 2, 1, -2, 1, -1, -2, 0, -2, -1}},
      {"C(0,1)", {6, -2, 0, -3, 2, -2, 4, 1, -2, -1, 0, -2, -1, -2}},
      {"C(1,1)", {12, -4, 0, -6, -4, 4, -4, 2, 2, 5, 4, 0, 2, -2}},
      {"C(2,0)", {6, 6, -3, 6, -2, -2, -3, 6, -3, -1, 2, -2, -2, 1}},
      {"C(0,2)", {6, 6, 0, -3, -2, -2, 0, -3, 0, -1, -2, 2, 1, 4}},
      {"C(0,3)", {6, -2, 6, 6, 2, -2, -2, -2, -2, -1, 0, -2, 2, -2}},
      {"chi(1,0)", {14, -2, -1, 5, 2, 2, 7, 1, 1, 0, 0, 0, -1, -1}},
      {"chi(0,1)", {7, -1, 1, -2, 3, -1, 5, 2, -1, 0, 1, -1, 0, -1}},
      {"chi(1,1)", {64, 0, -2, 1, 0, 0, 18, 0, 0, 1, 0, 0, 0, 0}},
      {"chiL(1,0)", {8, 0, -1, 8, 0, 4, 3, 0, 3, 1, 0, 2, 0, 1}},
      {"chiL(0,1)", {6, -2, 0, -3, 2, -2, 4, 1, -2, -1, 0, -2, -1, -2}},
      {"chiL(1,1)", {30, -2, 0, -15, -2, -2, 4, 1, -2, 2, 2, -2, 1, -2}},
      {"chiS(1,0)", {20, -4, -1, 2, 4, 0, 11, 2, -1, -1, 0, -2, -2, -3}},
      {"chiS(0,1)", {8, 0, 2, -1, 4, 0, 6, 3, 0, 1, 2, 0, 1, 0}},
      {"chiS(1,1)", {70, -2, -5, -2, -2, 2, 19, -2, 1, 0, -2, 0, -2, -1}},
  };
}

}  // namespace g2orbit::reference
