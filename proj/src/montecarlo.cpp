#include "secrecy/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace secrecy::montecarlo {

using pointprocess::DiskWindow;
using pointprocess::Point;
using pointprocess::PointSet;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kMaxRedraws = 1000;

// Lexicographic (distance, x, y): the deterministic tie-break among BSs.
bool precedes(double ra, Point a, double rb, Point b) noexcept {
  if (ra != rb) return ra < rb;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

double nearest_or_inf(Point q, std::span<const Point> pts) {
  const auto nn = pointprocess::nearest_neighbor(q, pts);
  return nn ? nn->distance : kInf;
}

double nearest_other_or_inf(std::span<const Point> pts, std::size_t self) {
  double best = kInf;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != self) best = std::min(best, pointprocess::distance(pts[i], pts[self]));
  }
  return best;
}

TrialOutcome evaluate_optimal(const NetworkParams& p, const PointSet& bs, const PointSet& eves,
                              std::size_t nearest_index) {
  // A BS gives a positive rate only if it lies in the Voronoi cell of the origin within
  // {0} U eves, so BSs beyond the cell's radius bound can be skipped. The nearest BS is
  // always evaluated so that an all-zero outcome reports it.
  const double reach = pointprocess::origin_cell_radius_bound(eves.points());
  const double eve_radius = eves.window().radius();

  TrialOutcome best;
  Point best_point{};
  bool have_best = false;
  const auto pts = bs.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double r = pointprocess::norm(pts[i]);
    if (r > reach && i != nearest_index) continue;
    const double found = nearest_or_inf(pts[i], eves.points());
    const double cap = std::max(0.0, eve_radius - r);
    const double d = std::min(found, cap);
    const double rate = secrecy_rate(p, r, d);
    if (!have_best || rate > best.rate || (rate == best.rate && precedes(r, pts[i], best.r_u, best_point))) {
      have_best = true;
      best_point = pts[i];
      best.rate = rate;
      best.r_u = r;
      best.d_detrimental = d;
      best.truncated = found > cap;
    }
  }
  return best;
}

}  // namespace

ScenarioSpec ScenarioSpec::radius_info_nearest(double d0) {
  if (!(d0 >= 0.0)) throw std::domain_error("detection radius d0 must be non-negative");
  return ScenarioSpec(Kind::RadiusInfoNearest, d0);
}

std::string ScenarioSpec::name() const {
  switch (kind_) {
    case Kind::FullInfoNearest: return "s1";
    case Kind::FullInfoOptimal: return "s2";
    case Kind::CellInfoNearest: return "s3-cell";
    case Kind::RadiusInfoNearest: return "s3-radius";
  }
  return "unknown";
}

void WindowPolicy::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("window epsilon must lie in (0, 1)");
  }
  if (!(factor >= 2.0) || !std::isfinite(factor)) {
    throw std::domain_error("window factor must be at least 2");
  }
}

double window_radius(const NetworkParams& p, const ScenarioSpec& s, const WindowPolicy& w) {
  w.validate();
  const double cover = pointprocess::window_radius_for(w.epsilon, p.lambda_bs()) +
                       pointprocess::window_radius_for(w.epsilon, p.lambda_e());
  if (s.kind() != ScenarioSpec::Kind::FullInfoOptimal) return cover;
  const double base =
      pointprocess::window_radius_for(w.epsilon, std::min(p.lambda_bs(), p.lambda_e()));
  return std::max(cover, w.factor * base);
}

double secrecy_rate(const NetworkParams& p, double r_u, double d) {
  if (!(d > r_u)) return 0.0;
  const double alpha = p.alpha();
  const auto& snr = p.snr();
  if (std::isinf(d)) {
    return snr.is_high() ? kInf : std::log1p(snr.linear_ratio() * std::pow(r_u, -alpha)) / std::numbers::ln2;
  }
  const double high = alpha * std::log2(d / r_u);
  if (snr.is_high()) return high;
  const double s = snr.linear_ratio();
  const double correction =
      (std::log1p(std::pow(d, alpha) / s) - std::log1p(std::pow(r_u, alpha) / s)) / std::numbers::ln2;
  return std::max(0.0, high - std::max(0.0, correction));
}

TrialOutcome evaluate_realization(const NetworkParams& p, const ScenarioSpec& s,
                                  const PointSet& bs, const PointSet& eves) {
  const auto serving = pointprocess::nearest_neighbor(Point{}, bs.points());
  if (!serving) throw std::invalid_argument("evaluate_realization: no base station in window");

  if (s.kind() == ScenarioSpec::Kind::FullInfoOptimal) {
    return evaluate_optimal(p, bs, eves, serving->index);
  }

  const Point x0 = bs[serving->index];
  const double r_u = serving->distance;
  const double eve_found = nearest_or_inf(x0, eves.points());
  // Eavesdroppers outside the window are at least this far from x0; using the window
  // boundary as a worst-case eavesdropper keeps the rate conservative.
  const double eve_cap = std::max(0.0, eves.window().radius() - r_u);

  TrialOutcome out;
  out.r_u = r_u;
  switch (s.kind()) {
    case ScenarioSpec::Kind::FullInfoNearest: {
      out.d_detrimental = std::min(eve_found, eve_cap);
      out.truncated = eve_found > eve_cap;
      break;
    }
    case ScenarioSpec::Kind::CellInfoNearest: {
      // The ball of radius D_min around x0 lies in its cell and every point outside the
      // cell is at least D_min away, so the worst case caps the distance at D_min.
      const double other = nearest_other_or_inf(bs.points(), serving->index);
      const double bs_cap = std::max(0.0, bs.window().radius() - r_u);
      const double d_min = 0.5 * std::min(other, bs_cap);
      out.d_min = d_min;
      out.d_detrimental = std::min({eve_found, d_min, eve_cap});
      out.truncated = std::min(eve_found, 0.5 * other) > out.d_detrimental;
      break;
    }
    case ScenarioSpec::Kind::RadiusInfoNearest: {
      const double known = std::min(eve_found, s.d0());
      out.d_detrimental = std::min(known, eve_cap);
      out.truncated = known > eve_cap;
      break;
    }
    case ScenarioSpec::Kind::FullInfoOptimal:
      break;
  }
  out.rate = secrecy_rate(p, r_u, out.d_detrimental);
  return out;
}

Seed trial_seed(Seed master_seed, std::uint64_t index) noexcept {
  return derive_seed(master_seed, index);
}

namespace {

struct Realization {
  PointSet bs;
  PointSet eves;
  std::uint32_t rejections;
};

Realization draw_realization(const NetworkParams& p, double radius, Seed seed) {
  const DiskWindow window(radius);
  for (std::uint32_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
    auto rng = make_stream(attempt == 0 ? seed : derive_seed(seed, attempt));
    PointSet bs = pointprocess::sample_ppp(p.lambda_bs(), window, rng);
    PointSet eves = pointprocess::sample_ppp(p.lambda_e(), window, rng);
    if (!bs.empty()) return Realization{std::move(bs), std::move(eves), attempt};
  }
  throw std::runtime_error("no base station in the simulation window after repeated redraws");
}

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("threshold grid must not be empty");
  for (double t : grid) {
    if (!std::isfinite(t)) throw std::invalid_argument("threshold grid must be finite");
  }
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("threshold grid must be sorted ascending");
  }
}

struct TrialRecord {
  double rate = 0.0;
  std::uint32_t rejections = 0;
  bool truncated = false;
};

// Trial-order reduction shared by the serial and parallel estimators.
EmpiricalCcdf reduce(std::span<const double> grid, std::span<const TrialRecord> records) {
  EmpiricalCcdf out;
  out.thresholds.assign(grid.begin(), grid.end());
  out.n_trials = records.size();
  std::vector<std::size_t> exceed(grid.size() + 1, 0);
  double sum = 0.0;
  for (const auto& r : records) {
    // Thresholds strictly below the rate are exceeded.
    const auto k = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), r.rate) - grid.begin());
    ++exceed[k];
    sum += r.rate;
    out.n_truncated += r.truncated ? 1 : 0;
    out.n_rejections += r.rejections;
  }
  const double n = static_cast<double>(records.size());
  out.survival.resize(grid.size());
  out.std_error.resize(grid.size());
  std::size_t above = 0;
  for (std::size_t i = grid.size(); i-- > 0;) {
    above += exceed[i + 1];
    const double prob = static_cast<double>(above) / n;
    out.survival[i] = prob;
    out.std_error[i] = std::sqrt(prob * (1.0 - prob) / n);
  }
  out.mean_rate = sum / n;
  double ss = 0.0;
  for (const auto& r : records) {
    const double dev = r.rate - out.mean_rate;
    ss += dev * dev;
  }
  out.mean_std_error = records.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return out;
}

TrialRecord record_trial(const NetworkParams& p, const ScenarioSpec& s, double radius, Seed seed) {
  const Realization real = draw_realization(p, radius, seed);
  const TrialOutcome o = evaluate_realization(p, s, real.bs, real.eves);
  return TrialRecord{o.rate, real.rejections, o.truncated};
}

void check_request(std::span<const double> grid, std::size_t n_trials) {
  check_grid(grid);
  if (n_trials == 0) throw std::invalid_argument("n_trials must be at least 1");
}

}  // namespace

TrialOutcome run_trial(const NetworkParams& p, const ScenarioSpec& s, const WindowPolicy& w,
                       Seed seed) {
  const Realization real = draw_realization(p, window_radius(p, s, w), seed);
  TrialOutcome out = evaluate_realization(p, s, real.bs, real.eves);
  out.rejections = real.rejections;
  return out;
}

EmpiricalCcdf estimate_ccdf_serial(const NetworkParams& p, const ScenarioSpec& s,
                                   std::span<const double> grid, std::size_t n_trials,
                                   Seed master_seed, const WindowPolicy& w) {
  check_request(grid, n_trials);
  const double radius = window_radius(p, s, w);
  std::vector<TrialRecord> records(n_trials);
  for (std::size_t i = 0; i < n_trials; ++i) {
    records[i] = record_trial(p, s, radius, trial_seed(master_seed, i));
  }
  return reduce(grid, records);
}

EmpiricalCcdf estimate_ccdf(const NetworkParams& p, const ScenarioSpec& s,
                            std::span<const double> grid, std::size_t n_trials,
                            Seed master_seed, const WindowPolicy& w, int workers) {
  check_request(grid, n_trials);
  const double radius = window_radius(p, s, w);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::vector<TrialRecord> records(n_trials);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(n_trials);

#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      records[static_cast<std::size_t>(i)] =
          record_trial(p, s, radius, trial_seed(master_seed, static_cast<std::uint64_t>(i)));
    } catch (...) {
#pragma omp critical(secrecy_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(grid, records);
}

MeanEstimate estimate_mean(const NetworkParams& p, const ScenarioSpec& s, std::size_t n_trials,
                           Seed master_seed, const WindowPolicy& w, int workers) {
  const double grid[] = {0.0};
  const EmpiricalCcdf c = estimate_ccdf(p, s, grid, n_trials, master_seed, w, workers);
  return MeanEstimate{c.mean_rate, c.mean_std_error, c.n_trials, c.n_truncated};
}

CoupledRates coupled_trial_suite(const NetworkParams& p, double d0, Seed seed,
                                 const WindowPolicy& w) {
  const auto optimal = ScenarioSpec::full_info_optimal();
  const auto radius_spec = ScenarioSpec::radius_info_nearest(d0);
  const Realization real = draw_realization(p, window_radius(p, optimal, w), seed);

  CoupledRates out;
  auto evaluate_all = [&](const NetworkParams& q) {
    ScenarioRates r;
    const auto cell = evaluate_realization(q, ScenarioSpec::cell_info_nearest(), real.bs, real.eves);
    const auto rad = evaluate_realization(q, radius_spec, real.bs, real.eves);
    const auto nearest = evaluate_realization(q, ScenarioSpec::full_info_nearest(), real.bs, real.eves);
    const auto best = evaluate_realization(q, optimal, real.bs, real.eves);
    r.cell_info = cell.rate;
    r.radius_info = rad.rate;
    r.full_nearest = nearest.rate;
    r.full_optimal = best.rate;
    out.truncated = out.truncated || cell.truncated || rad.truncated || nearest.truncated || best.truncated;
    return r;
  };
  out.high_snr = evaluate_all(p.with_snr(SnrModel::high()));
  if (!p.snr().is_high()) out.finite_snr = evaluate_all(p);
  return out;
}

}  // namespace secrecy::montecarlo
