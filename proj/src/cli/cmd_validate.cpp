#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "cli_internal.hpp"
#include "secrecy/analytic.hpp"
#include "secrecy/pointprocess.hpp"
#include "secrecy/specfun.hpp"
#include "secrecy/stats.hpp"

namespace secrecy::cli {

namespace {

using montecarlo::ScenarioSpec;
namespace pp = pointprocess;

constexpr double kPi = std::numbers::pi;

class Report {
 public:
  explicit Report(std::ostream& os) : os_(os) {}

  /// Records one check; `statistic` is compared against `tolerance` by the caller.
  void check(const std::string& name, bool pass, double statistic, double tolerance) {
    os_ << (pass ? "PASS " : "FAIL ") << name << " statistic=" << format_number(statistic)
        << " tolerance=" << format_number(tolerance) << '\n';
    ++total_;
    failed_ += pass ? 0 : 1;
  }

  int finish() {
    os_ << "summary: " << (total_ - failed_) << "/" << total_ << " passed\n";
    return failed_ == 0 ? kSuccess : kValidationFailure;
  }

 private:
  std::ostream& os_;
  int total_ = 0;
  int failed_ = 0;
};

std::string point_label(double lambda_e, double alpha) {
  return "lambda_e=" + format_number(lambda_e) + " alpha=" + format_number(alpha);
}

// Largest standardized excursion of `value` outside [lo, hi], in units of the binomial
// standard error at the violated bound.
double bracket_excess(double value, double lo, double hi, std::size_t n) {
  auto se = [n](double p) { return std::max(std::sqrt(p * (1.0 - p) / static_cast<double>(n)), 1e-300); };
  return std::max((lo - value) / se(lo), (value - hi) / se(hi));
}

void suite_bounds(const RunConfig& cfg, Report& report) {
  auto grid = cfg.thresholds();
  if (grid.front() != 0.0) grid.insert(grid.begin(), 0.0);
  std::uint64_t stream = 0;
  for (double alpha : {4.0, 2.5}) {
    for (double le : {0.1, 1.0, 10.0}) {
      const NetworkParams p(cfg.lambda_bs, le * cfg.lambda_bs, alpha, cfg.params().snr());
      const auto c = montecarlo::estimate_ccdf(p, ScenarioSpec::full_info_optimal(), grid, cfg.n_trials,
                                               derive_seed(cfg.seed, stream++), cfg.window(), cfg.workers);
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Threshold t(grid[i]);
        worst = std::max(worst, bracket_excess(c.survival[i], analytic::ccdf_s2_lower(p, t),
                                               analytic::ccdf_s2_upper_pgfl(p, t), c.n_trials));
      }
      report.check("s2-bracket " + point_label(p.lambda_e(), alpha), worst <= 3.0, worst, 3.0);
      if (le == 1.0) {
        const double fit = analytic::coverage_s2_exact_r0zero(p);
        const double gap = std::abs(c.survival[0] - fit);
        const double tol = 3.0 * c.std_error[0] + 0.01;
        report.check("s2-coverage-r0zero " + point_label(p.lambda_e(), alpha), gap <= tol, gap, tol);
      }

      const auto cell = montecarlo::estimate_mean(p, ScenarioSpec::cell_info_nearest(), cfg.n_trials,
                                                  derive_seed(cfg.seed, stream++), cfg.window(), cfg.workers);
      const double shortfall = analytic::mean_s3_cell_lower(p) - cell.rate;
      const double tol = 3.0 * cell.std_error;
      report.check("s3-cell-mean-above-bound " + point_label(p.lambda_e(), alpha), shortfall <= tol, shortfall, tol);
    }
  }
}

void suite_dmin(const RunConfig& cfg, Report& report) {
  const double lambda = cfg.lambda_bs;
  const pp::DiskWindow window(pp::window_radius_for(cfg.window_eps, lambda));
  std::vector<double> r_u;
  std::vector<double> d_min;
  for (std::size_t i = 0; i < cfg.n_trials; ++i) {
    const Seed trial = derive_seed(cfg.seed, i);
    for (std::uint64_t attempt = 0;; ++attempt) {
      auto rng = make_stream(derive_seed(trial, attempt));
      const auto user_bs = pp::sample_ppp(lambda, window, rng);
      const auto generators = pp::sample_ppp(lambda, window, rng);
      if (user_bs.empty() || generators.empty()) continue;
      r_u.push_back(*pp::nearest_distance({0.0, 0.0}, user_bs));
      // A BS placed at the origin is a typical generator of the tessellation.
      std::vector<pp::Point> with_origin{{0.0, 0.0}};
      with_origin.insert(with_origin.end(), generators.points().begin(), generators.points().end());
      d_min.push_back(*pp::half_nn_distance(pp::PointSet(std::move(with_origin), lambda, window), 0));
      break;
    }
  }
  const double critical = stats::ks_critical_5pct(cfg.n_trials);
  const double ks_ru = stats::ks_statistic(r_u, [&](double r) { return -std::expm1(-kPi * lambda * r * r); });
  report.check("nearest-bs-distance-ks", ks_ru < critical, ks_ru, critical);
  const NetworkParams p(lambda, 1.0, 4.0);
  const double ks_dmin = stats::ks_statistic(d_min, [&](double r) { return 1.0 - analytic::dmin_survival(p, r); });
  report.check("dmin-ks", ks_dmin < critical, ks_dmin, critical);
}

void suite_cell_area(const RunConfig& cfg, Report& report) {
  constexpr std::size_t kProbes = 4000;
  const double lambda = cfg.lambda_e;
  std::vector<double> normalized(cfg.n_trials);
  for (std::size_t i = 0; i < cfg.n_trials; ++i) {
    auto rng = make_stream(derive_seed(cfg.seed, i));
    normalized[i] = lambda * pp::sample_typical_cell_area(lambda, kProbes, rng);
  }
  const auto m = stats::moments(normalized);
  const double rel = std::abs(m.mean - 1.0);
  report.check("mean-cell-area", rel <= 0.02, rel, 0.02);

  const specfun::CellAreaLaw law;
  const double ks = stats::ks_statistic(normalized, [&](double v) {
    return v <= 0.0 ? 0.0 : boost::math::gamma_p(law.q(), law.b() * v);
  });
  report.check("cell-area-gamma-ks", ks < 0.05, ks, 0.05);

  // Coupled probes: one more eavesdropper must never enlarge the estimate.
  std::size_t violations = 0;
  const std::size_t n_coupled = std::min<std::size_t>(cfg.n_trials, 1000);
  const pp::DiskWindow window(2.0 * pp::window_radius_for(1e-12, lambda));
  for (std::size_t i = 0; i < n_coupled; ++i) {
    auto rng = make_stream(derive_seed(derive_seed(cfg.seed, ~0ULL), i));
    auto eves = pp::sample_ppp(lambda, window, rng);
    const auto extra = pp::sample_ppp(lambda, pp::DiskWindow(window.radius() / 2.0), rng);
    const pp::DiskWindow probes(window.radius() / 2.0);
    const Seed probe_seed = rng();
    auto first = make_stream(probe_seed);
    const double before = pp::estimate_origin_cell_area(eves, probes, kProbes / 4, first);
    std::vector<pp::Point> more(eves.points().begin(), eves.points().end());
    if (!extra.empty()) more.push_back(extra[0]);
    auto second = make_stream(probe_seed);
    const double after =
        pp::estimate_origin_cell_area(pp::PointSet(std::move(more), lambda, window), probes, kProbes / 4, second);
    violations += after > before ? 1 : 0;
  }
  report.check("cell-area-monotone-in-eavesdroppers", violations == 0, static_cast<double>(violations), 0.0);
}

void suite_ordering(const RunConfig& cfg, Report& report) {
  const double snr_db = cfg.snr_db.value_or(20.0);
  const NetworkParams p = cfg.params().with_snr(SnrModel::from_db(snr_db));
  std::size_t dominance = 0;
  std::size_t snr_order = 0;
  std::size_t positivity = 0;
  std::size_t truncated = 0;
  for (std::size_t i = 0; i < cfg.n_trials; ++i) {
    const auto r = montecarlo::coupled_trial_suite(p, cfg.d0, montecarlo::trial_seed(cfg.seed, i), cfg.window());
    const auto& hi = r.high_snr;
    const auto& lo = *r.finite_snr;
    for (const auto* x : {&hi, &lo}) {
      dominance += (x->cell_info > x->full_nearest) + (x->radius_info > x->full_nearest) +
                   (x->full_nearest > x->full_optimal);
    }
    snr_order += (lo.cell_info > hi.cell_info) + (lo.radius_info > hi.radius_info) +
                 (lo.full_nearest > hi.full_nearest) + (lo.full_optimal > hi.full_optimal);
    positivity += ((lo.cell_info > 0) != (hi.cell_info > 0)) + ((lo.radius_info > 0) != (hi.radius_info > 0)) +
                  ((lo.full_nearest > 0) != (hi.full_nearest > 0)) + ((lo.full_optimal > 0) != (hi.full_optimal > 0));
    truncated += r.truncated ? 1 : 0;
  }
  report.check("scenario-dominance-violations", dominance == 0, static_cast<double>(dominance), 0.0);
  report.check("finite-below-high-snr-violations", snr_order == 0, static_cast<double>(snr_order), 0.0);
  report.check("positivity-mismatch-at-r0-zero", positivity == 0, static_cast<double>(positivity), 0.0);
  const double frac = static_cast<double>(truncated) / static_cast<double>(cfg.n_trials);
  const double budget = std::max(10.0 * cfg.window_eps, 10.0 / static_cast<double>(cfg.n_trials));
  report.check("truncation-fraction", frac <= budget, frac, budget);
}

void suite_determinism(const RunConfig& cfg, Report& report) {
  const auto grid = cfg.thresholds();
  const auto p = cfg.params();
  const auto s = cfg.scenario_spec();
  const auto reference = montecarlo::estimate_ccdf_serial(p, s, grid, cfg.n_trials, cfg.seed, cfg.window());
  for (int workers : {1, 2, 8}) {
    const auto run = montecarlo::estimate_ccdf(p, s, grid, cfg.n_trials, cfg.seed, cfg.window(), workers);
    const bool same = run == reference;
    report.check("identical-to-serial workers=" + std::to_string(workers), same, same ? 0.0 : 1.0, 0.0);
  }
}

}  // namespace

const std::vector<std::string>& validate_suites() {
  static const std::vector<std::string> names{"bounds", "dmin", "cell-area", "ordering", "determinism"};
  return names;
}

int cmd_validate(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  int code = kSuccess;
  write_output(cfg.out, out, [&](std::ostream& os) {
    Report report(os);
    os << "suite " << suite << " trials=" << cfg.n_trials << " seed=" << cfg.seed << '\n';
    if (suite == "bounds") {
      suite_bounds(cfg, report);
    } else if (suite == "dmin") {
      suite_dmin(cfg, report);
    } else if (suite == "cell-area") {
      suite_cell_area(cfg, report);
    } else if (suite == "ordering") {
      suite_ordering(cfg, report);
    } else if (suite == "determinism") {
      suite_determinism(cfg, report);
    } else {
      throw UsageError("validate: unknown suite '" + suite + "'");
    }
    code = report.finish();
  });
  return code;
}

}  // namespace secrecy::cli
