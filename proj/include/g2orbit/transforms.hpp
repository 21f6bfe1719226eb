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

#include <complex>
#include <functional>
#include <vector>

#include "g2orbit/lattice.hpp"
#include "g2orbit/orbitfn.hpp"

namespace g2orbit {

/// Values of a function on F_M, in Grid enumeration order.
struct SampledField {
  int level = 1;
  std::vector<std::complex<double>> values;
};

/// Expansion coefficients d_lambda, in Spectrum enumeration order.
struct CoefficientVector {
  Family family = Family::C;
  int level = 1;
  std::vector<std::complex<double>> values;
};

/// Weighted sum of c_s f(s) conj(g(s)) over the grid. Throws
/// std::invalid_argument when either field does not match the grid.
std::complex<double> discrete_inner(const Grid& grid, const SampledField& f,
                                    const SampledField& g);
std::complex<double> discrete_inner(const SampledField& f, const SampledField& g);

SampledField sample(const Grid& grid, const std::function<std::complex<double>(const Point&)>& fn);

/// Samples of the real renormalized basis function X_lambda of the family.
SampledField sample(Family f, Weight lambda, const Grid& grid);

/// Forward and inverse orbit-function transform on F_M for one family.
///
/// The transform uses the real renormalized basis, so real data gives real
/// coefficients. It is matrix-free unless `cache_matrix` is set, in which case
/// the basis values X_lambda(s) are computed once at construction.
class Transform {
 public:
  Transform(Family family, int M, bool cache_matrix = false);

  Family family() const { return family_; }
  int level() const { return grid_.level(); }
  const Grid& grid() const { return grid_; }
  const Spectrum& spectrum() const { return spectrum_; }
  bool cached() const { return !matrix_.empty(); }

  /// X_lambda at a grid point, both given by enumeration index.
  double basis_value(std::size_t spectrum_index, std::size_t grid_index) const;

  /// d_lambda = <f, X_lambda>_M / (12 M^2 h_lambda).
  CoefficientVector forward(const SampledField& f) const;

  /// f(s) = sum over the spectrum of d_lambda X_lambda(s).
  SampledField inverse(const CoefficientVector& d) const;

 private:
  Family family_;
  Grid grid_;
  Spectrum spectrum_;
  std::vector<SignedOrbit> basis_;
  std::vector<Point> points_;
  std::vector<double> matrix_;
};

CoefficientVector forward(Family family, int M, const SampledField& f);
SampledField inverse(Family family, int M, const CoefficientVector& d);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n);

inline constexpr int kDefaultQuadratureOrder = 40;

/// Continuous scalar product over F of the real renormalized basis functions,
/// sqrt(3) times the integral over x1 in [0, 1/2], x2 in [0, 1/3 - 2 x1 / 3],
/// by an n x n tensor Gauss-Legendre rule on the triangle.
double continuous_inner(Family fa, Weight la, Family fb, Weight lb,
                        int order = kDefaultQuadratureOrder);

}  // namespace g2orbit
