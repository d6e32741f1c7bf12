#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secrecy/params.hpp"
#include "secrecy/pointprocess.hpp"
#include "secrecy/random.hpp"

namespace secrecy::montecarlo {

/// Cell association plus eavesdropper-information model.
class ScenarioSpec {
 public:
  enum class Kind {
    FullInfoNearest,    ///< every eavesdropper known; nearest BS serves
    FullInfoOptimal,    ///< every eavesdropper known; the best BS serves
    CellInfoNearest,    ///< only intracell eavesdroppers known; nearest BS serves
    RadiusInfoNearest,  ///< eavesdroppers known within d0 of the serving BS
  };

  static ScenarioSpec full_info_nearest() noexcept { return ScenarioSpec(Kind::FullInfoNearest, 0.0); }
  static ScenarioSpec full_info_optimal() noexcept { return ScenarioSpec(Kind::FullInfoOptimal, 0.0); }
  static ScenarioSpec cell_info_nearest() noexcept { return ScenarioSpec(Kind::CellInfoNearest, 0.0); }
  /// Throws std::domain_error if d0 < 0.
  static ScenarioSpec radius_info_nearest(double d0);

  Kind kind() const noexcept { return kind_; }
  /// Detection radius; only meaningful for RadiusInfoNearest.
  double d0() const noexcept { return d0_; }
  /// Short CLI name: s1, s2, s3-cell or s3-radius.
  std::string name() const;

 private:
  ScenarioSpec(Kind kind, double d0) noexcept : kind_(kind), d0_(d0) {}
  Kind kind_;
  double d0_;
};

/// Simulation window sizing. Truncation of the infinite-plane model is controlled by
/// the probability budget `epsilon`; FullInfoOptimal enlarges its window by `factor`.
struct WindowPolicy {
  double epsilon = 1e-6;
  double factor = 3.0;

  /// Throws std::domain_error unless 0 < epsilon < 1 and factor >= 2.
  void validate() const;
};

/// Disk radius used for one scenario's realizations. Nearest-BS scenarios use
/// r(eps, lambda_bs) + r(eps, lambda_e) so the serving BS and its nearest eavesdropper
/// both fall inside except with probability about 2 eps. FullInfoOptimal uses
/// factor * r(eps, min(lambda_bs, lambda_e)), never smaller than the former.
double window_radius(const NetworkParams& p, const ScenarioSpec& s, const WindowPolicy& w);

struct TrialOutcome {
  double rate = 0.0;           ///< secrecy rate, >= 0
  double r_u = 0.0;            ///< distance from the user to the serving BS
  double d_detrimental = 0.0;  ///< worst-case eavesdropper distance from the serving BS
  std::optional<double> d_min; ///< CellInfoNearest only
  bool truncated = false;      ///< the window boundary was the binding eavesdropper distance
  std::uint32_t rejections = 0;///< redraws caused by a window with no BS
};

/// Secrecy rate of a link of length r_u against a worst-case eavesdropper at distance d.
/// High-SNR: max(0, alpha log2(d / r_u)).
/// Finite SNR: max(0, log2((1 + snr r_u^-alpha) / (1 + snr d^-alpha))), evaluated as the
/// high-SNR value minus a non-negative log1p correction so it never exceeds it.
double secrecy_rate(const NetworkParams& p, double r_u, double d);

/// Evaluates a scenario on a given realization. `bs` must be non-empty.
TrialOutcome evaluate_realization(const NetworkParams& p, const ScenarioSpec& s,
                                  const pointprocess::PointSet& bs,
                                  const pointprocess::PointSet& eves);

/// One realization seeded by `trial_seed`. Windows with no BS are redrawn from derived
/// substreams (counted in `rejections`).
TrialOutcome run_trial(const NetworkParams& p, const ScenarioSpec& s, const WindowPolicy& w,
                       Seed trial_seed);

/// Seed of trial `index` under `master_seed`.
Seed trial_seed(Seed master_seed, std::uint64_t index) noexcept;

struct EmpiricalCcdf {
  std::vector<double> thresholds;
  std::vector<double> survival;  ///< fraction of trials with rate > threshold
  std::vector<double> std_error; ///< sqrt(p (1 - p) / n)
  std::size_t n_trials = 0;
  double mean_rate = 0.0;
  double mean_std_error = 0.0;
  std::size_t n_truncated = 0;
  std::size_t n_rejections = 0;

  double truncation_fraction() const noexcept {
    return n_trials == 0 ? 0.0 : static_cast<double>(n_truncated) / static_cast<double>(n_trials);
  }
  friend bool operator==(const EmpiricalCcdf&, const EmpiricalCcdf&) = default;
};

/// Parallel estimator (OpenMP). `workers` = 0 uses the runtime default. The result is
/// bit-identical for every worker count: trial i always uses trial_seed(master, i) and
/// the reduction runs in trial order.
/// Throws std::invalid_argument for an empty or unsorted grid or n_trials == 0.
EmpiricalCcdf estimate_ccdf(const NetworkParams& p, const ScenarioSpec& s,
                            std::span<const double> grid, std::size_t n_trials,
                            Seed master_seed, const WindowPolicy& w = {}, int workers = 0);

/// Single-threaded reference for estimate_ccdf. Same contract, same output.
EmpiricalCcdf estimate_ccdf_serial(const NetworkParams& p, const ScenarioSpec& s,
                                   std::span<const double> grid, std::size_t n_trials,
                                   Seed master_seed, const WindowPolicy& w = {});

struct MeanEstimate {
  double rate = 0.0;
  double std_error = 0.0;
  std::size_t n_trials = 0;
  std::size_t n_truncated = 0;
};

MeanEstimate estimate_mean(const NetworkParams& p, const ScenarioSpec& s, std::size_t n_trials,
                           Seed master_seed, const WindowPolicy& w = {}, int workers = 0);

struct ScenarioRates {
  double cell_info = 0.0;    ///< CellInfoNearest
  double radius_info = 0.0;  ///< RadiusInfoNearest(d0)
  double full_nearest = 0.0; ///< FullInfoNearest
  double full_optimal = 0.0; ///< FullInfoOptimal
};

struct CoupledRates {
  ScenarioRates high_snr;
  /// Present when the params carry a finite SNR.
  std::optional<ScenarioRates> finite_snr;
  bool truncated = false;
};

/// All four scenarios evaluated on one shared realization (the FullInfoOptimal window).
CoupledRates coupled_trial_suite(const NetworkParams& p, double d0, Seed trial_seed,
                                 const WindowPolicy& w = {});

}  // namespace secrecy::montecarlo
