#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cli_internal.hpp"
#include "secrecy/cli.hpp"

namespace secrecy::cli {

namespace {


struct Parsed {
  RunConfig cfg;
  AnalyticOptions analytic;
  FigureOptions figure;
  std::string suite;
  std::optional<Seed> seed_flag;
  std::optional<std::string> out_dir;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parsed in;
  RunConfig& cfg = in.cfg;

  CLI::App app{"Secrecy rates in Poisson cellular networks: closed forms, Monte Carlo, figure presets", "secrecy_sg"};
  app.set_config("--config", "", "Flat key=value file supplying option defaults; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  // Options shared by every subcommand; subcommands fall through to them.
  app.add_option("--lambda-bs", cfg.lambda_bs, "Base-station density")->capture_default_str();
  auto* lambda_e = app.add_option("--lambda-e", cfg.lambda_e, "Eavesdropper density")->capture_default_str();
  auto* alpha = app.add_option("--alpha", cfg.alpha, "Path-loss exponent (> 2)")->capture_default_str();
  auto* snr_db = app.add_option("--snr-db", cfg.snr_db, "Finite SNR at unit distance, in dB");
  bool high_snr = false;
  auto* high = app.add_flag("--high-snr", high_snr, "High-SNR mode (the default for simulate)");
  high->excludes(snr_db);
  app.add_option("--scenario", cfg.scenario, "s1 | s2 | s3-cell | s3-radius")
      ->check(CLI::IsMember({"s1", "s2", "s3-cell", "s3-radius"}))
      ->capture_default_str();
  app.add_option("--d0", cfg.d0, "Detection radius for s3-radius")->capture_default_str();
  app.add_option("--r0-min", cfg.grid.min, "First threshold of the R_0 grid")->capture_default_str();
  app.add_option("--r0-max", cfg.grid.max, "Last threshold of the R_0 grid")->capture_default_str();
  app.add_option("--r0-step", cfg.grid.step, "Spacing of the R_0 grid")->capture_default_str();
  app.add_option("--r0", cfg.r0, "Single threshold instead of the grid");
  app.add_option("--trials", cfg.n_trials, "Monte Carlo trials per estimate")->capture_default_str();
  app.add_option("--seed", in.seed_flag, "Master seed (default: $SECRECY_SG_SEED, then 1)");
  app.add_option("--window-eps", cfg.window_eps, "Truncation probability budget of the window")->capture_default_str();
  app.add_option("--window-factor", cfg.window_factor, "Window enlargement for s2 (>= 2)")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0: all available)")->capture_default_str();
  app.add_option("--out", cfg.out, "Write CSV here instead of stdout");

  auto* analytic = app.add_subcommand("analytic", "Evaluate a closed-form CCDF or mean");
  analytic->fallthrough();
  analytic->add_option("--formula", in.analytic.formula, "Closed form to evaluate")
      ->required()
      ->check(CLI::IsMember(analytic_formulas()));
  analytic->add_option("--gamma-q", in.analytic.gamma_q, "Shape of the cell-area law")->capture_default_str();
  analytic->add_option("--gamma-b", in.analytic.gamma_b, "Rate of the cell-area law")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo CCDF and mean of the secrecy rate");
  simulate->fallthrough();

  auto* figure = app.add_subcommand("figure", "Write the CSV curves of a figure preset");
  figure->fallthrough();
  figure->add_option("--id", in.figure.id, "Figure preset: 4, 5, 6, 7 or 8")->required()->check(CLI::Range(4, 8));
  figure->add_option("--out-dir", in.figure.out_dir, "Directory for the CSV files")->capture_default_str();
  figure->add_option("--points", in.figure.points, "Eavesdropper-density grid points")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Run a statistical validation suite");
  validate->fallthrough();
  validate->add_option("--suite", in.suite, "Suite to run")->required()->check(CLI::IsMember(validate_suites()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  }

  try {
    if (in.seed_flag) {
      cfg.seed = *in.seed_flag;
    } else if (auto env = seed_from_environment()) {
      cfg.seed = *env;
    }
    if (high_snr) cfg.snr_db.reset();
    cfg.validate();

    if (analytic->parsed()) return cmd_analytic(cfg, in.analytic, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (figure->parsed()) {
      in.figure.alpha_overridden = alpha->count() > 0;
      in.figure.lambda_e_overridden = lambda_e->count() > 0;
      in.figure.snr_overridden = snr_db->count() > 0 || high->count() > 0;
      return cmd_figure(cfg, in.figure, err);
    }
    return cmd_validate(cfg, in.suite, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace secrecy::cli
