#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secrecy/cli.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/params.hpp"
#include "secrecy/random.hpp"

namespace secrecy::cli {

/// Invalid flag combination or value; maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to the I/O exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- CSV -------------------------------------------------------------------

/// Shortest round-trip decimal form; integral values keep a trailing ".0".
std::string format_number(double v);

/// Shortest round-trip form without the ".0" suffix, for file names.
std::string format_compact(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void comment(std::string_view text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void labelled(std::string_view label, double value);
  void labelled_count(std::string_view label, std::uint64_t value);

 private:
  std::ostream& os_;
};

// ---- configuration ---------------------------------------------------------

struct GridSpec {
  double min = 0.0;
  double max = 6.0;
  double step = 0.5;

  /// min, min + step, ..., up to max (inclusive, with a small tolerance).
  std::vector<double> values() const;
};

struct RunConfig {
  double lambda_bs = 1.0;
  double lambda_e = 1.0;
  double alpha = 4.0;
  std::optional<double> snr_db;  ///< absent: high-SNR mode
  std::string scenario = "s1";
  double d0 = 1.0;
  GridSpec grid;
  std::optional<double> r0;  ///< single threshold instead of the grid
  std::size_t n_trials = 100000;
  Seed seed = 1;
  double window_eps = 1e-6;
  double window_factor = 3.0;
  int workers = 0;  ///< 0: all available
  std::optional<std::string> out;

  /// Throws UsageError when a field violates its invariant.
  void validate() const;

  NetworkParams params() const;
  montecarlo::ScenarioSpec scenario_spec() const;
  montecarlo::WindowPolicy window() const;
  std::vector<double> thresholds() const;
  std::string snr_label() const;
};

/// Resolves SECRECY_SG_SEED; throws UsageError if it is set but not an unsigned integer.
std::optional<Seed> seed_from_environment();

/// Opens `path` for writing or throws IoError.
class OutputFile {
 public:
  explicit OutputFile(std::filesystem::path path);

  std::ostream& stream() { return stream_; }
  /// Flushes and checks the stream; throws IoError on failure.
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream stream_;
};

/// Runs `body` against the file at `path` when given, otherwise against `fallback`.
template <class Body>
void write_output(const std::optional<std::string>& path, std::ostream& fallback, Body&& body) {
  if (!path) {
    body(fallback);
    fallback.flush();
    return;
  }
  OutputFile file(*path);
  body(file.stream());
  file.close();
}

// ---- commands --------------------------------------------------------------

struct AnalyticOptions {
  std::string formula;
  double gamma_q = 3.61;
  double gamma_b = 3.61;
};

struct FigureOptions {
  int id = 4;
  std::string out_dir = ".";
  int points = 13;
  bool alpha_overridden = false;
  bool lambda_e_overridden = false;
  bool snr_overridden = false;
};

const std::vector<std::string>& analytic_formulas();
const std::vector<std::string>& validate_suites();

int cmd_analytic(const RunConfig& cfg, const AnalyticOptions& opts, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_figure(const RunConfig& cfg, const FigureOptions& opts, std::ostream& err);
int cmd_validate(const RunConfig& cfg, const std::string& suite, std::ostream& out);

}  // namespace secrecy::cli
