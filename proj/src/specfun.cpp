#include "secrecy/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secrecy::specfun {

CellAreaLaw::CellAreaLaw(double shape, double rate) : q_(shape), b_(rate) {
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
    throw std::domain_error("CellAreaLaw: shape and rate must be positive and finite");
  }
}

namespace {

// E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
double e1_series(double x) {
  double term = 1.0;  // (-x)^k / k!
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double contrib = term / k;
    sum += contrib;
    if (std::abs(contrib) < 1e-18) break;
  }
  return -euler_gamma() - std::log(x) - sum;
}

// Modified Lentz evaluation of the continued fraction
// E1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))).
double e1_continued_fraction(double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("exp_integral_e1: argument must be positive");
  }
  if (std::isinf(x)) return 0.0;
  return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double cell_area_pdf(const CellAreaLaw& law, double v) {
  if (!(v > 0.0)) {
    throw std::domain_error("cell_area_pdf: area must be positive");
  }
  const double q = law.q();
  const double b = law.b();
  return std::exp(q * std::log(b) + (q - 1.0) * std::log(v) - b * v - std::lgamma(q));
}

double cell_area_laplace(const CellAreaLaw& law, double s) {
  if (!(s >= 0.0)) {
    throw std::domain_error("cell_area_laplace: s must be non-negative");
  }
  // log1p keeps (b/(b+s))^q accurate for small s.
  return std::exp(-law.q() * std::log1p(s / law.b()));
}

double sample_cell_area(const CellAreaLaw& law, RandomStream& rng) {
  // libstdc++ implements Marsaglia-Tsang squeeze/rejection for shape >= 1.
  std::gamma_distribution<double> dist(law.q(), 1.0 / law.b());
  return dist(rng);
}

}  // namespace secrecy::specfun
