#include <cmath>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cli_internal.hpp"
#include "secrecy/analytic.hpp"

namespace secrecy::cli {

namespace {

namespace fs = std::filesystem;
using montecarlo::EmpiricalCcdf;
using montecarlo::ScenarioSpec;

struct Curve {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

class FigureWriter {
 public:
  FigureWriter(const RunConfig& cfg, const FigureOptions& opts, std::ostream& err)
      : cfg_(cfg), opts_(opts), err_(err) {}

  std::vector<double> alphas() const {
    return opts_.alpha_overridden ? std::vector<double>{cfg_.alpha} : std::vector<double>{4.0, 2.5};
  }

  /// Eavesdropper densities swept log-uniformly over [0.1, 10].
  std::vector<double> lambda_e_grid() const {
    if (opts_.lambda_e_overridden) return {cfg_.lambda_e};
    std::vector<double> v;
    const int n = opts_.points;
    for (int i = 0; i < n; ++i) v.push_back(std::pow(10.0, -1.0 + 2.0 * i / (n - 1)));
    return v;
  }

  std::optional<double> sim_snr_db() const { return opts_.snr_overridden ? cfg_.snr_db : std::optional<double>(20.0); }

  NetworkParams analytic_params(double lambda_e, double alpha) const {
    return NetworkParams(cfg_.lambda_bs, lambda_e, alpha);
  }

  NetworkParams sim_params(double lambda_e, double alpha) const {
    const auto db = sim_snr_db();
    return NetworkParams(cfg_.lambda_bs, lambda_e, alpha, db ? SnrModel::from_db(*db) : SnrModel::high());
  }

  /// Simulates one point of a sweep. Each curve/point pair gets its own derived seed.
  EmpiricalCcdf simulate(const NetworkParams& p, const ScenarioSpec& s, std::span<const double> grid,
                         std::uint64_t curve, std::uint64_t point) const {
    const Seed seed = derive_seed(derive_seed(cfg_.seed, curve), point);
    return montecarlo::estimate_ccdf(p, s, grid, cfg_.n_trials, seed, cfg_.window(), cfg_.workers);
  }

  void write(const Curve& c, const std::string& title) {
    std::error_code ec;
    fs::create_directories(opts_.out_dir, ec);
    if (ec) throw IoError("cannot create directory '" + opts_.out_dir + "': " + ec.message());
    const fs::path path = fs::path(opts_.out_dir) / (c.name + ".csv");
    OutputFile file(path);
    CsvWriter csv(file.stream());
    csv.comment("figure " + std::to_string(opts_.id) + ": " + title);
    csv.comment(settings());
    csv.header(c.columns);
    for (const auto& r : c.rows) csv.row(r);
    file.close();
    err_ << "wrote " << path.string() << '\n';
  }

  std::string settings() const {
    const auto db = sim_snr_db();
    std::string s = "settings: lambda_bs=" + format_number(cfg_.lambda_bs) +
                    " simulated_snr=" + (db ? format_number(*db) + "dB" : std::string("high")) +
                    " trials=" + std::to_string(cfg_.n_trials) + " seed=" + std::to_string(cfg_.seed) +
                    " window_eps=" + format_number(cfg_.window_eps) +
                    " window_factor=" + format_number(cfg_.window_factor);
    if (opts_.id == 8) {
      s += " d0_grid=0.25:0.25:3.25";
    } else if (!opts_.lambda_e_overridden) {
      s += " lambda_e_grid=" + std::to_string(opts_.points) + " log-spaced points over [0.1, 10]";
    }
    return s;
  }

  std::string suffix(double alpha) const { return "_alpha" + format_compact(alpha); }

 private:
  const RunConfig& cfg_;
  const FigureOptions& opts_;
  std::ostream& err_;
};

using MeanFn = std::function<double(const NetworkParams&)>;

Curve analytic_mean_curve(FigureWriter& fw, const std::string& name, double alpha, const MeanFn& f) {
  Curve c{name, {"lambda_e", "mean"}, {}};
  for (double le : fw.lambda_e_grid()) c.rows.push_back({le, f(fw.analytic_params(le, alpha))});
  return c;
}

void figure_mean_sweep(FigureWriter& fw, int id, const ScenarioSpec& spec, const std::string& tag,
                       const std::vector<std::pair<std::string, MeanFn>>& analytic_curves,
                       const std::string& title) {
  const auto alphas = fw.alphas();
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double alpha = alphas[a];
    for (const auto& [name, f] : analytic_curves) {
      fw.write(analytic_mean_curve(fw, "fig" + std::to_string(id) + "_" + name + fw.suffix(alpha), alpha, f), title);
    }
    Curve sim{"fig" + std::to_string(id) + "_" + tag + "_sim" + fw.suffix(alpha),
              {"lambda_e", "mean", "stderr", "truncation_fraction"}, {}};
    const double grid[] = {0.0};
    const auto lambdas = fw.lambda_e_grid();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const auto r = fw.simulate(fw.sim_params(lambdas[i], alpha), spec, grid, id * 100 + a, i);
      sim.rows.push_back({lambdas[i], r.mean_rate, r.mean_std_error, r.truncation_fraction()});
    }
    fw.write(sim, title);
  }
}

void figure5(FigureWriter& fw) {
  const std::string title = "secure coverage probability vs eavesdropper density, full information, best BS serves";
  const double thresholds[] = {0.0, 5.0};
  const auto alphas = fw.alphas();
  const auto lambdas = fw.lambda_e_grid();
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double alpha = alphas[a];
    std::vector<EmpiricalCcdf> sims;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      sims.push_back(fw.simulate(fw.sim_params(lambdas[i], alpha), ScenarioSpec::full_info_optimal(),
                                 thresholds, 500 + a, i));
    }
    for (std::size_t k = 0; k < 2; ++k) {
      const double r0 = thresholds[k];
      const std::string tail = "_r0-" + format_compact(r0) + fw.suffix(alpha);
      Curve upper{"fig5_s2_upper_pgfl" + tail, {"lambda_e", "coverage"}, {}};
      Curve lower{"fig5_s2_lower" + tail, {"lambda_e", "coverage"}, {}};
      Curve voronoi{"fig5_s2_upper_voronoi" + tail, {"lambda_e", "coverage"}, {}};
      Curve sim{"fig5_s2_sim" + tail, {"lambda_e", "coverage", "stderr"}, {}};
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const auto p = fw.analytic_params(lambdas[i], alpha);
        const Threshold t(r0);
        upper.rows.push_back({lambdas[i], analytic::ccdf_s2_upper_pgfl(p, t)});
        lower.rows.push_back({lambdas[i], analytic::ccdf_s2_lower(p, t)});
        voronoi.rows.push_back({lambdas[i], analytic::ccdf_s2_upper_voronoi(p, t)});
        sim.rows.push_back({lambdas[i], sims[i].survival[k], sims[i].std_error[k]});
      }
      for (const auto* c : {&upper, &lower, &voronoi, &sim}) fw.write(*c, title);
    }
  }
}

void figure8(FigureWriter& fw, const RunConfig& cfg, const FigureOptions& opts) {
  const std::string title = "average secrecy rate vs detection radius, nearest BS serves";
  const std::vector<double> lambdas =
      opts.lambda_e_overridden ? std::vector<double>{cfg.lambda_e} : std::vector<double>{0.1, 1.0};
  std::vector<double> d0s;
  for (int i = 1; i <= 13; ++i) d0s.push_back(0.25 * i);
  const double grid[] = {0.0};
  const auto alphas = fw.alphas();
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      const double alpha = alphas[a];
      const std::string tail = "_lambda_e-" + format_compact(lambdas[l]) + fw.suffix(alpha);
      Curve exact{"fig8_s3_radius_mean" + tail, {"d0", "mean"}, {}};
      Curve sim{"fig8_s3_radius_sim" + tail, {"d0", "mean", "stderr", "truncation_fraction"}, {}};
      for (std::size_t i = 0; i < d0s.size(); ++i) {
        exact.rows.push_back({d0s[i], analytic::mean_s3_radius(fw.analytic_params(lambdas[l], alpha), d0s[i])});
        const auto r = fw.simulate(fw.sim_params(lambdas[l], alpha), ScenarioSpec::radius_info_nearest(d0s[i]),
                                   grid, 800 + 10 * a + l, i);
        sim.rows.push_back({d0s[i], r.mean_rate, r.mean_std_error, r.truncation_fraction()});
      }
      fw.write(exact, title);
      fw.write(sim, title);
    }
  }
}

}  // namespace

int cmd_figure(const RunConfig& cfg, const FigureOptions& opts, std::ostream& err) {
  if (opts.id < 4 || opts.id > 8) throw UsageError("figure: --id must be one of 4, 5, 6, 7, 8");
  if (opts.points < 2) throw UsageError("figure: --points must be at least 2");
  FigureWriter fw(cfg, opts, err);
  switch (opts.id) {
    case 4:
      figure_mean_sweep(fw, 4, ScenarioSpec::full_info_nearest(), "s1", {{"s1_mean", analytic::mean_s1}},
                        "average secrecy rate vs eavesdropper density, full information, nearest BS serves");
      break;
    case 5:
      figure5(fw);
      break;
    case 6:
      figure_mean_sweep(fw, 6, ScenarioSpec::full_info_optimal(), "s2",
                        {{"s2_upper_mean", analytic::mean_s2_upper},
                         {"s2_lower_mean", analytic::mean_s2_lower},
                         {"s2_voronoi_mean", [](const NetworkParams& p) { return analytic::mean_s2_voronoi_approx(p); }}},
                        "average secrecy rate vs eavesdropper density, full information, best BS serves");
      break;
    case 7:
      figure_mean_sweep(fw, 7, ScenarioSpec::cell_info_nearest(), "s3_cell",
                        {{"s3_cell_lower_mean", analytic::mean_s3_cell_lower}},
                        "average secrecy rate vs eavesdropper density, intracell information only, nearest BS serves");
      break;
    case 8:
      figure8(fw, cfg, opts);
      break;
  }
  return kSuccess;
}

}  // namespace secrecy::cli
