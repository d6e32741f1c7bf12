#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "secrecy/cli.hpp"

using secrecy::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path golden(const char* name) {
  return std::filesystem::path(SECRECY_TEST_DATA_DIR) / "golden" / name;
}

std::filesystem::path scratch(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / "secrecy_sg_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analytic examples") {
  auto r = run({"analytic", "--formula", "s1-mean", "--lambda-bs", "1", "--lambda-e", "1", "--alpha", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "metric,value\nmean,2.0\n");

  r = run({"analytic", "--formula", "s3-radius-ccdf", "--d0", "1", "--r0", "0"});
  CHECK(r.code == 0);
  REQUIRE(lines(r.out).size() == 2);
  CHECK(std::stod(lines(r.out)[1].substr(4)) == doctest::Approx(0.49907).epsilon(1e-5));

  r = run({"analytic", "--formula", "s2-voronoi-ccdf", "--r0", "0", "--lambda-bs", "1", "--lambda-e", "1"});
  CHECK(r.code == 0);
  CHECK(std::stod(lines(r.out)[1].substr(4)) == doctest::Approx(0.58633).epsilon(1e-5));

  r = run({"analytic", "--formula", "s2-coverage", "--lambda-bs", "10"});
  CHECK(lines(r.out)[1].rfind("coverage,0.9916", 0) == 0);
}

TEST_CASE("golden CSV schemas") {
  auto r = run({"analytic", "--formula", "s1-ccdf", "--lambda-e", "1", "--alpha", "4", "--r0-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("analytic_s1_ccdf.csv")));

  r = run({"simulate", "--scenario", "s3-radius", "--d0", "1.5", "--trials", "500", "--seed", "42",
           "--r0-max", "2", "--r0-step", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("simulate_s3_radius.csv")));
}

TEST_CASE("simulate output structure") {
  const auto r = run({"simulate", "--trials", "2000", "--seed", "42", "--r0-min", "0", "--r0-max", "1", "--r0-step", "0.5"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 10);
  CHECK(l[0].rfind("# ", 0) == 0);
  CHECK(l[1] == "r0,survival,stderr");
  CHECK(l[2].rfind("0.0,", 0) == 0);
  CHECK(l[5].rfind("mean,", 0) == 0);
  CHECK(l[6].rfind("mean_stderr,", 0) == 0);
  CHECK(l[7].rfind("truncation_fraction,", 0) == 0);
  CHECK(l[8] == "n_trials,2000");
  CHECK(l[9] == "seed,42");
  CHECK(r.err.empty());
}

TEST_CASE("simulate is deterministic and independent of the worker count") {
  const std::vector<std::string> base{"simulate", "--scenario", "s2", "--trials", "3000", "--seed", "5", "--snr-db", "20"};
  auto with = [&](const char* workers) {
    auto args = base;
    args.insert(args.end(), {"--workers", workers});
    return run(args);
  };
  const auto one = with("1");
  const auto eight = with("8");
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);
  CHECK(one.out == with("1").out);
}

TEST_CASE("seed precedence: flag, then config file, then environment") {
  const auto cfg = scratch("seed.ini");
  std::ofstream(cfg) << "seed = 11\n";
  ::setenv("SECRECY_SG_SEED", "7", 1);
  CHECK(lines(run({"simulate", "--trials", "10", "--r0", "0"}).out).back() == "seed,7");
  CHECK(lines(run({"simulate", "--trials", "10", "--r0", "0", "--config", cfg.string()}).out).back() == "seed,11");
  CHECK(lines(run({"simulate", "--trials", "10", "--r0", "0", "--seed", "3", "--config", cfg.string()}).out).back() ==
        "seed,3");
  ::setenv("SECRECY_SG_SEED", "not-a-number", 1);
  CHECK(run({"simulate", "--trials", "10"}).code == 2);
  ::unsetenv("SECRECY_SG_SEED");
  CHECK(lines(run({"simulate", "--trials", "10", "--r0", "0"}).out).back() == "seed,1");
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto cfg = scratch("defaults.ini");
  std::ofstream(cfg) << "# comment\nlambda-e = 0.1\nalpha = 4\n";
  auto r = run({"analytic", "--formula", "s1-mean", "--config", cfg.string()});
  CHECK(std::stod(lines(r.out)[1].substr(5)) == doctest::Approx(6.918863237274595));
  r = run({"analytic", "--formula", "s1-mean", "--config", cfg.string(), "--lambda-e", "1"});
  CHECK(r.out == "metric,value\nmean,2.0\n");
  const auto bad = scratch("bad.ini");
  std::ofstream(bad) << "no-such-option = 1\n";
  CHECK(run({"analytic", "--formula", "s1-mean", "--config", bad.string()}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"analytic", "--formula", "nope"},
           {"analytic"},
           {"analytic", "--formula", "s1-ccdf", "--snr-db", "20"},
           {"analytic", "--formula", "s3-radius-mean", "--d0", "0"},
           {"simulate", "--scenario", "s9"},
           {"simulate", "--snr-db", "20", "--high-snr"},
           {"simulate", "--alpha", "2"},
           {"simulate", "--lambda-e", "0"},
           {"simulate", "--trials", "0"},
           {"simulate", "--window-eps", "1"},
           {"simulate", "--window-factor", "1.5"},
           {"simulate", "--r0-step", "0"},
           {"simulate", "--r0-min", "-1"},
           {"simulate", "--d0", "-1"},
           {"figure", "--id", "3"},
           {"figure", "--id", "9"},
           {"validate", "--suite", "everything"},
       }) {
    CAPTURE(args.size());
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help goes to stdout and succeeds") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("unwritable output exits with code 3") {
  const auto r = run({"simulate", "--trials", "10", "--out", "/nonexistent-dir/x/y.csv"});
  CHECK(r.code == 3);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = scratch("out.csv");
  const std::vector<std::string> args{"simulate", "--trials", "300", "--seed", "8"};
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto to_file = run(with_out);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == run(args).out);
}

TEST_CASE("figure presets write one CSV per curve") {
  const auto dir = scratch("fig7");
  std::filesystem::remove_all(dir);
  const auto r = run({"figure", "--id", "7", "--trials", "200", "--points", "3", "--out-dir", dir.string()});
  REQUIRE(r.code == 0);
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(dir)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"fig7_s3_cell_lower_mean_alpha2.5.csv", "fig7_s3_cell_lower_mean_alpha4.csv",
                                          "fig7_s3_cell_sim_alpha2.5.csv", "fig7_s3_cell_sim_alpha4.csv"});
  const auto bound = lines(slurp(dir / "fig7_s3_cell_lower_mean_alpha4.csv"));
  REQUIRE(bound.size() == 6);
  CHECK(bound[0].rfind("# figure 7", 0) == 0);
  CHECK(bound[1].rfind("# settings:", 0) == 0);
  CHECK(bound[2] == "lambda_e,mean");
  CHECK(bound[4].rfind("1.0,0.52606881166758", 0) == 0);
  const auto sim = lines(slurp(dir / "fig7_s3_cell_sim_alpha4.csv"));
  CHECK(sim[2] == "lambda_e,mean,stderr,truncation_fraction");

  const auto one = scratch("fig4");
  std::filesystem::remove_all(one);
  CHECK(run({"figure", "--id", "4", "--trials", "100", "--alpha", "4", "--lambda-e", "1", "--out-dir", one.string()}).code == 0);
  const auto analytic = lines(slurp(one / "fig4_s1_mean_alpha4.csv"));
  CHECK(analytic.back() == "1.0,2.0");
}

TEST_CASE("validate suites report PASS lines and exit 0") {
  for (const char* suite : {"dmin", "ordering", "determinism"}) {
    CAPTURE(suite);
    const auto r = run({"validate", "--suite", suite, "--trials", "2000", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
}

}  // TEST_SUITE
