#include <ostream>
#include <string>

#include "cli_internal.hpp"

namespace secrecy::cli {

namespace {

std::string provenance(const RunConfig& cfg) {
  std::string s = "secrecy_sg simulate scenario=" + cfg.scenario;
  if (cfg.scenario == "s3-radius") s += " d0=" + format_number(cfg.d0);
  s += " lambda_bs=" + format_number(cfg.lambda_bs) + " lambda_e=" + format_number(cfg.lambda_e) +
       " alpha=" + format_number(cfg.alpha) + " " + cfg.snr_label() +
       " trials=" + std::to_string(cfg.n_trials) + " seed=" + std::to_string(cfg.seed) +
       " window_eps=" + format_number(cfg.window_eps) +
       " window_factor=" + format_number(cfg.window_factor);
  return s;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto grid = cfg.thresholds();
  const auto result = montecarlo::estimate_ccdf(cfg.params(), cfg.scenario_spec(), grid, cfg.n_trials,
                                                cfg.seed, cfg.window(), cfg.workers);
  write_output(cfg.out, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.comment(provenance(cfg));
    csv.header({"r0", "survival", "stderr"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      csv.row({result.thresholds[i], result.survival[i], result.std_error[i]});
    }
    csv.labelled("mean", result.mean_rate);
    csv.labelled("mean_stderr", result.mean_std_error);
    csv.labelled("truncation_fraction", result.truncation_fraction());
    csv.labelled_count("n_trials", result.n_trials);
    csv.labelled_count("seed", cfg.seed);
  });
  return kSuccess;
}

}  // namespace secrecy::cli
