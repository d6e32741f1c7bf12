#pragma once

#include <numbers>

#include "secrecy/random.hpp"

namespace secrecy::specfun {

/// Gamma-law fit of the normalized area of the typical Poisson-Voronoi cell
/// (unit-density process): density b^q v^{q-1} e^{-bv} / Gamma(q).
class CellAreaLaw {
 public:
  CellAreaLaw() = default;
  /// Throws std::domain_error unless q > 0 and b > 0.
  CellAreaLaw(double shape, double rate);

  double q() const noexcept { return q_; }
  double b() const noexcept { return b_; }
  double mean() const noexcept { return q_ / b_; }
  double variance() const noexcept { return q_ / (b_ * b_); }

 private:
  double q_ = 3.61;
  double b_ = 3.61;
};

/// Exponential integral E1(x) = \int_x^\infty e^{-t}/t dt for x > 0.
/// Power series up to x = 1, Lentz continued fraction above. Absolute error below 1e-12.
double exp_integral_e1(double x);

constexpr double euler_gamma() noexcept { return std::numbers::egamma_v<double>; }

double cell_area_pdf(const CellAreaLaw& law, double v);

/// E[exp(-s V)] = (b / (b + s))^q.
double cell_area_laplace(const CellAreaLaw& law, double s);

/// One gamma(q, b) draw.
double sample_cell_area(const CellAreaLaw& law, RandomStream& rng);

}  // namespace secrecy::specfun
