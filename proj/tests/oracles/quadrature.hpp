// Copyright 2026 The h2vqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Numerical-quadrature references for s-type Gaussian integrals. Only
// function values, the radial Laplacian of a Gaussian, the Gaussian product
// rule and the potential of a spherical Gaussian charge are used; none of the
// closed-form integral formulas appear here.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using Vec = std::array<double, 3>;

struct Gaussian {
  Vec center{};
  std::vector<double> exponents;
  std::vector<double> weights;  // applied to primitives normalized as (2a/pi)^{3/4}
};

inline double dist2(const Vec& a, const Vec& b) {
  const double x = a[0] - b[0], y = a[1] - b[1], z = a[2] - b[2];
  return x * x + y * y + z * z;
}

inline double prim_norm(double a) { return std::pow(2.0 * a / std::numbers::pi, 0.75); }

template <typename F>
double integrate(F&& f, double lo, double hi, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, tol);
}

/// g evaluated at squared distance s2 from its center.
inline double value(const Gaussian& g, double s2) {
  double v = 0.0;
  for (std::size_t i = 0; i < g.exponents.size(); ++i)
    v += g.weights[i] * prim_norm(g.exponents[i]) * std::exp(-g.exponents[i] * s2);
  return v;
}

/// Laplacian of g at squared distance s2.
inline double laplacian(const Gaussian& g, double s2) {
  double v = 0.0;
  for (std::size_t i = 0; i < g.exponents.size(); ++i) {
    const double a = g.exponents[i];
    v += g.weights[i] * prim_norm(a) * (4.0 * a * a * s2 - 6.0 * a) * std::exp(-a * s2);
  }
  return v;
}

// Integral over space of F(|r - A|^2, |r - B|^2) in cylindrical coordinates
// about the A-B axis.
template <typename F>
double two_center(const Vec& A, const Vec& B, F&& f) {
  const double R = std::sqrt(dist2(A, B));
  constexpr double L = 14.0;
  auto inner = [&](double z) {
    auto radial = [&](double rho) {
      const double r2 = rho * rho;
      return 2.0 * std::numbers::pi * rho * f(z * z + r2, (z - R) * (z - R) + r2);
    };
    return integrate(radial, 0.0, 3.0) + integrate(radial, 3.0, L);
  };
  return integrate(inner, -L, 0.0) + integrate(inner, 0.0, R) + integrate(inner, R, R + L);
}

inline double overlap(const Gaussian& a, const Gaussian& b) {
  return two_center(a.center, b.center,
                    [&](double sa, double sb) { return value(a, sa) * value(b, sb); });
}

inline double kinetic(const Gaussian& a, const Gaussian& b) {
  return two_center(a.center, b.center, [&](double sa, double sb) {
    return -0.5 * value(a, sa) * laplacian(b, sb);
  });
}

// int exp(-p |r - P|^2) w(|r - Q|) d^3r with the angular part done in closed
// form about Q; D = |P - Q|. w is given as a function of radius.
template <typename W>
double spherical_about(double p, double D, W&& w) {
  auto f = [&](double r) {
    const double x = 4.0 * p * r * D;
    const double shape = x < 1e-12 ? 1.0 : -std::expm1(-x) / x;
    return 2.0 * std::numbers::pi * r * r * 2.0 * std::exp(-p * (r - D) * (r - D)) * shape *
           w(r);
  };
  const double hi = D + 12.0 / std::sqrt(p);
  const double lo = std::max(0.0, D - 12.0 / std::sqrt(p));
  return integrate(f, lo, D) + integrate(f, D, hi);
}

struct ProductPrimitive {
  double p = 0.0;
  Vec P{};
  double k = 0.0;  // prefactor including both primitive norms and weights
};

inline std::vector<ProductPrimitive> product(const Gaussian& a, const Gaussian& b) {
  std::vector<ProductPrimitive> out;
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    for (std::size_t j = 0; j < b.exponents.size(); ++j) {
      const double x = a.exponents[i], y = b.exponents[j];
      ProductPrimitive pp;
      pp.p = x + y;
      for (int d = 0; d < 3; ++d) pp.P[d] = (x * a.center[d] + y * b.center[d]) / pp.p;
      pp.k = a.weights[i] * b.weights[j] * prim_norm(x) * prim_norm(y) *
             std::exp(-x * y / pp.p * dist2(a.center, b.center));
      out.push_back(pp);
    }
  return out;
}

inline double nuclear_attraction(const Gaussian& a, const Gaussian& b, const Vec& C,
                                 double charge) {
  double s = 0.0;
  for (const auto& pp : product(a, b)) {
    const double D = std::sqrt(dist2(pp.P, C));
    s += pp.k * spherical_about(pp.p, D, [](double r) { return 1.0 / r; });
  }
  return -charge * s;
}

/// (ab|cd): the cd charge distribution is a sum of spherical Gaussians whose
/// potentials are (pi/q)^{3/2} erf(sqrt(q) r) / r.
inline double electron_repulsion(const Gaussian& a, const Gaussian& b, const Gaussian& c,
                                 const Gaussian& d) {
  double s = 0.0;
  const auto ab = product(a, b);
  for (const auto& cd : product(c, d)) {
    const double q = cd.p;
    auto potential = [q](double r) {
      const double sq = std::sqrt(q);
      const double v = r < 1e-10 ? 2.0 * sq / std::sqrt(std::numbers::pi) : std::erf(sq * r) / r;
      return std::pow(std::numbers::pi / q, 1.5) * v;
    };
    for (const auto& pp : ab) {
      const double D = std::sqrt(dist2(pp.P, cd.P));
      s += pp.k * cd.k * spherical_about(pp.p, D, potential);
    }
  }
  return s;
}

/// int_0^1 exp(-x t^2) dt.
inline double boys_f0(double x) {
  return integrate([x](double t) { return std::exp(-x * t * t); }, 0.0, 1.0, 1e-15);
}

/// Variational energy of a single hydrogen atom in the normalized function g,
/// by radial quadrature: <g| -1/2 lap - 1/r |g> / <g|g>.
inline double hydrogen_atom_energy(const Gaussian& g) {
  auto norm = [&](double r) { return 4.0 * std::numbers::pi * r * r * std::pow(value(g, r * r), 2); };
  auto energy = [&](double r) {
    const double v = value(g, r * r);
    return 4.0 * std::numbers::pi * r * r * v * (-0.5 * laplacian(g, r * r) - v / r);
  };
  return (integrate(energy, 0.0, 2.0) + integrate(energy, 2.0, 20.0)) /
         (integrate(norm, 0.0, 2.0) + integrate(norm, 2.0, 20.0));
}

}  // namespace oracle
