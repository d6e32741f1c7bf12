#include <functional>
#include <map>
#include <ostream>

#include "cli_internal.hpp"
#include "secrecy/analytic.hpp"

namespace secrecy::cli {

namespace {

using CcdfFn = std::function<double(const NetworkParams&, const Threshold&)>;
using ScalarFn = std::function<double(const NetworkParams&)>;

struct Formula {
  CcdfFn ccdf;         ///< set for per-threshold formulas
  ScalarFn scalar;     ///< set for single-value formulas
  const char* metric;  ///< row label of a single-value formula
};

std::map<std::string, Formula> formula_table(const RunConfig& cfg, const specfun::CellAreaLaw& law) {
  namespace a = analytic;
  const double d0 = cfg.d0;
  std::map<std::string, Formula> t;
  t["s1-ccdf"] = {a::ccdf_s1, {}, nullptr};
  t["s1-mean"] = {{}, a::mean_s1, "mean"};
  t["s2-upper-pgfl-ccdf"] = {a::ccdf_s2_upper_pgfl, {}, nullptr};
  t["s2-lower-ccdf"] = {a::ccdf_s2_lower, {}, nullptr};
  t["s2-voronoi-ccdf"] = {[law](const NetworkParams& p, const Threshold& r) { return a::ccdf_s2_upper_voronoi(p, r, law); },
                          {}, nullptr};
  t["s2-coverage"] = {{}, [law](const NetworkParams& p) { return a::coverage_s2_exact_r0zero(p, law); }, "coverage"};
  t["s2-upper-mean"] = {{}, a::mean_s2_upper, "mean"};
  t["s2-lower-mean"] = {{}, a::mean_s2_lower, "mean"};
  t["s2-voronoi-mean"] = {{}, [law](const NetworkParams& p) { return a::mean_s2_voronoi_approx(p, law); }, "mean"};
  t["s3-cell-ccdf"] = {a::ccdf_s3_cell_lower, {}, nullptr};
  t["s3-cell-mean"] = {{}, a::mean_s3_cell_lower, "mean"};
  t["s3-radius-ccdf"] = {[d0](const NetworkParams& p, const Threshold& r) { return a::ccdf_s3_radius(p, r, d0); },
                         {}, nullptr};
  t["s3-radius-mean"] = {{}, [d0](const NetworkParams& p) { return a::mean_s3_radius(p, d0); }, "mean"};
  return t;
}

}  // namespace

const std::vector<std::string>& analytic_formulas() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, f] : formula_table(RunConfig{}, {})) v.push_back(name);
    return v;
  }();
  return names;
}

int cmd_analytic(const RunConfig& cfg, const AnalyticOptions& opts, std::ostream& out) {
  if (cfg.snr_db) {
    throw UsageError("analytic: the closed forms are high-SNR expressions; drop --snr-db");
  }
  if (opts.formula == "s3-radius-mean" && !(cfg.d0 > 0.0)) {
    throw UsageError("analytic: s3-radius-mean needs --d0 > 0");
  }
  const specfun::CellAreaLaw law(opts.gamma_q, opts.gamma_b);
  const auto table = formula_table(cfg, law);
  const auto it = table.find(opts.formula);
  if (it == table.end()) throw UsageError("analytic: unknown formula '" + opts.formula + "'");
  const Formula& f = it->second;
  const NetworkParams p = cfg.params();

  write_output(cfg.out, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    if (f.ccdf) {
      csv.header({"r0", "value"});
      for (double r0 : cfg.thresholds()) csv.row({r0, f.ccdf(p, Threshold(r0))});
    } else {
      csv.header({"metric", "value"});
      csv.labelled(f.metric, f.scalar(p));
    }
  });
  return kSuccess;
}

}  // namespace secrecy::cli
