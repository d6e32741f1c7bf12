#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cli_internal.hpp"

namespace secrecy::cli {

namespace {

constexpr std::size_t kMaxGridPoints = 100000;

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> out;
  const double tol = 1e-9 * step;
  for (std::size_t i = 0;; ++i) {
    const double v = min + static_cast<double>(i) * step;
    if (v > max + tol || out.size() >= kMaxGridPoints) break;
    out.push_back(v);
  }
  return out;
}

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  require(lambda_bs > 0.0 && std::isfinite(lambda_bs), "--lambda-bs must be positive");
  require(lambda_e > 0.0 && std::isfinite(lambda_e), "--lambda-e must be positive");
  require(alpha > 2.0 && std::isfinite(alpha), "--alpha must exceed 2");
  require(!snr_db || std::isfinite(*snr_db), "--snr-db must be finite");
  require(d0 >= 0.0 && std::isfinite(d0), "--d0 must be non-negative");
  require(grid.min >= 0.0 && std::isfinite(grid.min), "--r0-min must be non-negative");
  require(grid.step > 0.0 && std::isfinite(grid.step), "--r0-step must be positive");
  require(grid.max >= grid.min && std::isfinite(grid.max), "--r0-max must not be below --r0-min");
  require((grid.max - grid.min) / grid.step < static_cast<double>(kMaxGridPoints),
          "threshold grid has too many points");
  require(!r0 || (*r0 >= 0.0 && std::isfinite(*r0)), "--r0 must be non-negative");
  require(n_trials >= 1, "--trials must be at least 1");
  require(window_eps > 0.0 && window_eps < 1.0, "--window-eps must lie in (0, 1)");
  require(window_factor >= 2.0 && std::isfinite(window_factor), "--window-factor must be at least 2");
  require(workers >= 0, "--workers must be non-negative");
  require(scenario == "s1" || scenario == "s2" || scenario == "s3-cell" || scenario == "s3-radius",
          "--scenario must be one of s1, s2, s3-cell, s3-radius");
}

NetworkParams RunConfig::params() const {
  const SnrModel snr = snr_db ? SnrModel::from_db(*snr_db) : SnrModel::high();
  return NetworkParams(lambda_bs, lambda_e, alpha, snr);
}

montecarlo::ScenarioSpec RunConfig::scenario_spec() const {
  using montecarlo::ScenarioSpec;
  if (scenario == "s1") return ScenarioSpec::full_info_nearest();
  if (scenario == "s2") return ScenarioSpec::full_info_optimal();
  if (scenario == "s3-cell") return ScenarioSpec::cell_info_nearest();
  if (scenario == "s3-radius") return ScenarioSpec::radius_info_nearest(d0);
  throw UsageError("unknown scenario '" + scenario + "'");
}

montecarlo::WindowPolicy RunConfig::window() const { return {window_eps, window_factor}; }

std::vector<double> RunConfig::thresholds() const {
  if (r0) return {*r0};
  return grid.values();
}

std::string RunConfig::snr_label() const {
  return snr_db ? "snr_db=" + format_number(*snr_db) : std::string("snr=high");
}

std::optional<Seed> seed_from_environment() {
  const char* raw = std::getenv("SECRECY_SG_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  Seed value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw UsageError("SECRECY_SG_SEED must be an unsigned integer, got '" + text + "'");
  }
  return value;
}

OutputFile::OutputFile(std::filesystem::path path) : path_(std::move(path)) {
  stream_.open(path_, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!stream_) throw IoError("cannot open '" + path_.string() + "' for writing");
}

void OutputFile::close() {
  stream_.flush();
  const bool ok = static_cast<bool>(stream_);
  stream_.close();
  if (!ok || stream_.fail()) throw IoError("failed writing '" + path_.string() + "'");
}

}  // namespace secrecy::cli
