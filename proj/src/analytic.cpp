#include "secrecy/analytic.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace secrecy::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// alpha / (2 ln 2): converts natural-log integrals over R_0 into bits.
double rate_prefactor(const NetworkParams& p) { return p.alpha() / (2.0 * kLn2); }

// 2^{2 R_0 / alpha}
double ball_growth(const NetworkParams& p, const Threshold& t) {
  return std::exp2(2.0 * t.r0() / p.alpha());
}

void require_nonneg_distance(double r, const char* what) {
  if (!(r >= 0.0)) throw std::domain_error(what);
}

}  // namespace

double one_minus_exp_neg(double x) noexcept { return -std::expm1(-x); }

double ccdf_s1(const NetworkParams& p, const Threshold& t) {
  return 1.0 / (1.0 + (p.lambda_e() / p.lambda_bs()) * ball_growth(p, t));
}

double mean_s1(const NetworkParams& p) {
  return rate_prefactor(p) * std::log1p(p.lambda_bs() / p.lambda_e());
}

double ccdf_s2_upper_pgfl(const NetworkParams& p, const Threshold& t) {
  return one_minus_exp_neg(p.density_ratio() / ball_growth(p, t));
}

double ccdf_s2_lower(const NetworkParams& p, const Threshold& t) { return ccdf_s1(p, t); }

namespace {

double voronoi_shrink(const NetworkParams& p, const Threshold& t) {
  const double root = std::exp2(t.r0() / p.alpha());
  return 4.0 / ((1.0 + root) * (1.0 + root));
}

}  // namespace

double ccdf_s2_upper_voronoi(const NetworkParams& p, const Threshold& t,
                             const specfun::CellAreaLaw& law) {
  const double s = voronoi_shrink(p, t) * p.density_ratio();
  return 1.0 - specfun::cell_area_laplace(law, s);
}

double ccdf_s2_upper_voronoi_sampled(const NetworkParams& p, const Threshold& t,
                                     std::span<const double> normalized_areas) {
  if (normalized_areas.empty()) {
    throw std::invalid_argument("ccdf_s2_upper_voronoi_sampled: no cell-area samples");
  }
  const double s = voronoi_shrink(p, t) * p.density_ratio();
  double acc = 0.0;
  for (double v : normalized_areas) acc += std::exp(-s * v);
  return 1.0 - acc / static_cast<double>(normalized_areas.size());
}

double coverage_s2_exact_r0zero(const NetworkParams& p, const specfun::CellAreaLaw& law) {
  return ccdf_s2_upper_voronoi(p, Threshold(0.0), law);
}

double mean_s2_upper(const NetworkParams& p) {
  const double x = p.density_ratio();
  return rate_prefactor(p) * (specfun::euler_gamma() + std::log(x) + specfun::exp_integral_e1(x));
}

double mean_s2_lower(const NetworkParams& p) { return mean_s1(p); }

double mean_s2_voronoi_approx(const NetworkParams& p, const specfun::CellAreaLaw& law) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double r0) { return ccdf_s2_upper_voronoi(p, Threshold(r0), law); };
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

double ccdf_s3_cell_lower(const NetworkParams& p, const Threshold& t) {
  return 1.0 / (1.0 + (p.lambda_e() / p.lambda_bs() + 4.0) * ball_growth(p, t));
}

double mean_s3_cell_lower(const NetworkParams& p) {
  const double lb = p.lambda_bs();
  const double le = p.lambda_e();
  return rate_prefactor(p) * std::log1p(lb / (4.0 * lb + le));
}

double ccdf_s3_radius(const NetworkParams& p, const Threshold& t, double d0) {
  require_nonneg_distance(d0, "ccdf_s3_radius: d0 must be non-negative");
  const double growth = ball_growth(p, t);
  const double known = one_minus_exp_neg(kPi * (p.lambda_e() + p.lambda_bs() / growth) * d0 * d0);
  return known * ccdf_s1(p, t);
}

double mean_s3_radius(const NetworkParams& p, double d0) {
  if (!(d0 > 0.0)) throw std::domain_error("mean_s3_radius: d0 must be positive");
  const double area = kPi * d0 * d0;
  const double deficit = specfun::exp_integral_e1(area * p.lambda_e()) -
                         specfun::exp_integral_e1(area * (p.lambda_e() + p.lambda_bs()));
  return mean_s1(p) - rate_prefactor(p) * deficit;
}

double ru_pdf(const NetworkParams& p, double r) {
  require_nonneg_distance(r, "ru_pdf: r must be non-negative");
  const double lb = p.lambda_bs();
  return 2.0 * kPi * lb * r * std::exp(-kPi * lb * r * r);
}

double dmin_survival(const NetworkParams& p, double r) {
  require_nonneg_distance(r, "dmin_survival: r must be non-negative");
  return std::exp(-4.0 * kPi * p.lambda_bs() * r * r);
}

double dmin_pdf(const NetworkParams& p, double r) {
  require_nonneg_distance(r, "dmin_pdf: r must be non-negative");
  const double lb = p.lambda_bs();
  return 8.0 * kPi * lb * r * std::exp(-4.0 * kPi * lb * r * r);
}

}  // namespace secrecy::analytic
