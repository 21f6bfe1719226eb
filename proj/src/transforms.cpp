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

#include "g2orbit/transforms.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace g2orbit {
namespace {

void check_field(const Grid& grid, const SampledField& f, const char* what) {
  if (f.level != grid.level() || f.values.size() != grid.size()) {
    throw std::invalid_argument(std::string(what) + ": field does not match grid F_" +
                                std::to_string(grid.level()));
  }
}

double full_norm(const Spectrum& spec, std::size_t i) {
  const double M = spec.level;
  return 12.0 * M * M * boost::rational_cast<double>(spec.entries[i].norm);
}

}  // namespace

std::complex<double> discrete_inner(const Grid& grid, const SampledField& f,
                                    const SampledField& g) {
  check_field(grid, f, "discrete_inner");
  check_field(grid, g, "discrete_inner");
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sum += static_cast<double>(grid.weights()[i]) * f.values[i] * std::conj(g.values[i]);
  }
  return sum;
}

std::complex<double> discrete_inner(const SampledField& f, const SampledField& g) {
  if (f.level != g.level) throw std::invalid_argument("discrete_inner: grid levels differ");
  return discrete_inner(Grid(f.level), f, g);
}

SampledField sample(const Grid& grid, const std::function<std::complex<double>(const Point&)>& fn) {
  SampledField out{grid.level(), {}};
  out.values.reserve(grid.size());
  for (const KacPoint& s : grid.points()) out.values.push_back(fn(s.real_point()));
  return out;
}

SampledField sample(Family f, Weight lambda, const Grid& grid) {
  const SignedOrbit orbit = signed_orbit(f, lambda);
  return sample(grid, [&](const Point& p) { return std::complex<double>(orbit.real(p), 0.0); });
}

Transform::Transform(Family family, int M, bool cache_matrix)
    : family_(family), grid_(M), spectrum_(g2orbit::spectrum(family, M)) {
  basis_.reserve(spectrum_.size());
  for (const SpectrumEntry& e : spectrum_.entries) basis_.push_back(signed_orbit(family, e.weight));
  points_.reserve(grid_.size());
  for (const KacPoint& s : grid_.points()) points_.push_back(s.real_point());
  if (cache_matrix) {
    matrix_.resize(spectrum_.size() * grid_.size());
    for (std::size_t l = 0; l < spectrum_.size(); ++l) {
      for (std::size_t s = 0; s < grid_.size(); ++s) {
        matrix_[l * grid_.size() + s] = basis_[l].real(points_[s]);
      }
    }
  }
}

double Transform::basis_value(std::size_t spectrum_index, std::size_t grid_index) const {
  if (!matrix_.empty()) return matrix_[spectrum_index * grid_.size() + grid_index];
  return basis_[spectrum_index].real(points_[grid_index]);
}

CoefficientVector Transform::forward(const SampledField& f) const {
  check_field(grid_, f, "forward");
  CoefficientVector d{family_, grid_.level(), {}};
  d.values.resize(spectrum_.size());
  for (std::size_t l = 0; l < spectrum_.size(); ++l) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t s = 0; s < grid_.size(); ++s) {
      sum += static_cast<double>(grid_.weights()[s]) * f.values[s] * basis_value(l, s);
    }
    d.values[l] = sum / full_norm(spectrum_, l);
  }
  return d;
}

SampledField Transform::inverse(const CoefficientVector& d) const {
  if (d.family != family_ || d.level != grid_.level() || d.values.size() != spectrum_.size()) {
    throw std::invalid_argument("inverse: coefficients do not match the " + to_string(family_) +
                                " spectrum at M=" + std::to_string(grid_.level()));
  }
  SampledField f{grid_.level(), std::vector<std::complex<double>>(grid_.size())};
  for (std::size_t s = 0; s < grid_.size(); ++s) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t l = 0; l < spectrum_.size(); ++l) sum += d.values[l] * basis_value(l, s);
    f.values[s] = sum;
  }
  return f;
}

CoefficientVector forward(Family family, int M, const SampledField& f) {
  return Transform(family, M).forward(f);
}

SampledField inverse(Family family, int M, const CoefficientVector& d) {
  return Transform(family, M).inverse(d);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double continuous_inner(Family fa, Weight la, Family fb, Weight lb, int order) {
  const QuadratureRule rule = gauss_legendre(order);
  const SignedOrbit xa = signed_orbit(fa, la);
  const SignedOrbit xb = signed_orbit(fb, lb);
  if (!xa.admissible || !xb.admissible) return 0.0;
  // x1 = u/2, x2 = v (1/3 - 2 x1/3) with u, v in [0, 1].
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double x1 = 0.5 * u;
    const double span = 1.0 / 3.0 - 2.0 * x1 / 3.0;
    for (int j = 0; j < order; ++j) {
      const double v = 0.5 * (rule.nodes[j] + 1.0);
      const Point p{x1, v * span};
      const double w = 0.25 * rule.weights[i] * rule.weights[j] * 0.5 * span;
      sum += w * xa.real(p) * xb.real(p);
    }
  }
  return std::sqrt(3.0) * sum;
}

}  // namespace g2orbit
