#include <doctest.h>

#include <algorithm>
#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "secrecy/pointprocess.hpp"
#include "secrecy/random.hpp"
#include "secrecy/specfun.hpp"
#include "secrecy/stats.hpp"

using namespace secrecy;
using namespace secrecy::pointprocess;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point> random_points(std::size_t n, double radius, RandomStream& rng) {
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double th = 2.0 * kPi * uniform01(rng);
    p = {r * std::cos(th), r * std::sin(th)};
  }
  return pts;
}

}  // namespace

TEST_SUITE("pointprocess") {

TEST_CASE("DiskWindow and PointSet validation") {
  CHECK_THROWS_AS(DiskWindow(0.0), std::domain_error);
  CHECK_THROWS_AS(DiskWindow(-1.0), std::domain_error);
  const DiskWindow w(2.0);
  CHECK(w.area() == doctest::Approx(4.0 * kPi));
  CHECK(w.contains({2.0, 0.0}));
  CHECK_FALSE(w.contains({2.0, 0.1}));
  CHECK_THROWS_AS(PointSet({{3.0, 0.0}}, 1.0, w), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({}, 0.0, w), std::domain_error);
  CHECK_NOTHROW(PointSet({}, 1.0, w));
}

TEST_CASE("sample_ppp count is Poisson(density * area)") {
  auto rng = make_stream(1);
  const DiskWindow w(2.0);
  std::vector<double> counts(100'000);
  for (auto& c : counts) {
    const auto set = sample_ppp(1.0, w, rng);
    for (const auto& p : set.points()) REQUIRE(squared_norm(p) <= 4.0);
    c = static_cast<double>(set.size());
  }
  const auto m = stats::moments(counts);
  CHECK(std::abs(m.mean - 4.0 * kPi) < 0.05);
  CHECK(std::abs(m.variance / (4.0 * kPi) - 1.0) < 0.02);
}

TEST_CASE("sample_ppp is deterministic for a fixed seed") {
  auto a = make_stream(99);
  auto b = make_stream(99);
  const auto s1 = sample_ppp(3.0, DiskWindow(1.5), a);
  const auto s2 = sample_ppp(3.0, DiskWindow(1.5), b);
  REQUIRE(s1.size() == s2.size());
  CHECK(std::equal(s1.points().begin(), s1.points().end(), s2.points().begin()));
}

TEST_CASE("sample_ppp points are uniform on the disk") {
  auto rng = make_stream(3);
  std::vector<double> radii;
  for (int i = 0; i < 2000; ++i) {
    const auto set = sample_ppp(1.0, DiskWindow(2.0), rng);
    for (const auto& p : set.points()) radii.push_back(norm(p));
  }
  const double ks = stats::ks_statistic(radii, [](double r) { return std::clamp(r * r / 4.0, 0.0, 1.0); });
  CHECK(ks < stats::ks_critical_5pct(radii.size()) * 1.5);
}

TEST_CASE("quadrant counts of sample_ppp are independent") {
  // Counts in two opposite quadrants, binned, then a chi-square independence test.
  auto rng = make_stream(2024);
  constexpr int kBins = 5;  // {<=1, 2, 3, 4, >=5}; each quadrant count ~ Poisson(pi)
  std::array<std::array<double, kBins>, kBins> table{};
  auto bin = [](int c) { return std::clamp(c - 1, 0, kBins - 1); };
  constexpr int kRuns = 10'000;
  for (int i = 0; i < kRuns; ++i) {
    int q1 = 0;
    int q3 = 0;
    const auto set = sample_ppp(1.0, DiskWindow(2.0), rng);
    for (const auto& p : set.points()) {
      if (p.x > 0 && p.y > 0) ++q1;
      if (p.x < 0 && p.y < 0) ++q3;
    }
    table[bin(q1)][bin(q3)] += 1.0;
  }
  std::array<double, kBins> rows{};
  std::array<double, kBins> cols{};
  for (int i = 0; i < kBins; ++i) {
    for (int j = 0; j < kBins; ++j) {
      rows[i] += table[i][j];
      cols[j] += table[i][j];
    }
  }
  double chi2 = 0.0;
  for (int i = 0; i < kBins; ++i) {
    for (int j = 0; j < kBins; ++j) {
      const double expected = rows[i] * cols[j] / kRuns;
      REQUIRE(expected > 5.0);
      chi2 += (table[i][j] - expected) * (table[i][j] - expected) / expected;
    }
  }
  const boost::math::chi_squared dist((kBins - 1) * (kBins - 1));
  const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  CAPTURE(chi2);
  CHECK(p_value > 0.001);
}

TEST_CASE("nearest_distance examples") {
  const DiskWindow w(10.0);
  CHECK(*nearest_distance({0, 0}, PointSet({{3.0, 4.0}}, 1.0, w)) == 5.0);
  CHECK_FALSE(nearest_distance({0, 0}, PointSet({}, 1.0, w)).has_value());
  CHECK(*nearest_distance({1, 1}, PointSet({{1.0, 1.0}, {2.0, 2.0}}, 1.0, w)) == 0.0);
}

TEST_CASE("nearest_neighbor breaks ties lexicographically") {
  const std::vector<Point> pts{{0.0, 1.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const auto nn = nearest_neighbor({0, 0}, pts);
  REQUIRE(nn);
  CHECK(nn->index == 2);  // (-1, 0) has the smallest x among the tied points
  CHECK(nn->distance == 1.0);
}

TEST_CASE("nearest_distance is rotation invariant") {
  auto rng = make_stream(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(20, 3.0, rng);
    const Point c{0.3, -0.2};
    const double th = 2.0 * kPi * uniform01(rng);
    std::vector<Point> rotated;
    for (const auto& p : pts) {
      const double dx = p.x - c.x;
      const double dy = p.y - c.y;
      rotated.push_back({c.x + std::cos(th) * dx - std::sin(th) * dy,
                         c.y + std::sin(th) * dx + std::cos(th) * dy});
    }
    const double a = *nearest_distance(c, PointSet(pts, 1.0, DiskWindow(3.0)));
    const double b = *nearest_distance(c, PointSet(rotated, 1.0, DiskWindow(4.0)));
    CHECK(std::abs(a - b) < 1e-12);
  }
}

TEST_CASE("distance to the nearest PPP point has CCDF exp(-pi r^2)") {
  auto rng = make_stream(5);
  const DiskWindow w(window_radius_for(1e-9, 1.0));
  constexpr int kRuns = 100'000;
  const std::array<double, 5> radii{0.2, 0.4, 0.6, 0.8, 1.0};
  std::array<int, 5> beyond{};
  for (int i = 0; i < kRuns; ++i) {
    const auto d = nearest_distance({0, 0}, sample_ppp(1.0, w, rng));
    REQUIRE(d.has_value());
    for (std::size_t k = 0; k < radii.size(); ++k) beyond[k] += (*d > radii[k]);
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double p = std::exp(-kPi * radii[k] * radii[k]);
    const double se = std::sqrt(p * (1 - p) / kRuns);
    CAPTURE(radii[k]);
    CHECK(std::abs(beyond[k] / double(kRuns) - p) < 3.0 * se);
  }
}

TEST_CASE("half_nn_distance") {
  const DiskWindow w(5.0);
  const PointSet pair({{0.0, 0.0}, {2.0, 0.0}}, 1.0, w);
  CHECK(*half_nn_distance(pair, 0) == 1.0);
  CHECK(*half_nn_distance(pair, 1) == 1.0);
  CHECK_FALSE(half_nn_distance(PointSet({{1.0, 1.0}}, 1.0, w), 0).has_value());
  CHECK_THROWS_AS(half_nn_distance(pair, 2), std::out_of_range);

  auto rng = make_stream(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = random_points(15, 5.0, rng);
    const PointSet set(pts, 1.0, w);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> others = pts;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      const double full = *nearest_distance(pts[i], PointSet(others, 1.0, w));
      CHECK(*half_nn_distance(set, i) == 0.5 * full);
    }
  }
}

TEST_CASE("D_min of a typical generator has survival exp(-4 pi r^2)") {
  auto rng = make_stream(25);
  const DiskWindow w(window_radius_for(1e-9, 1.0));
  std::vector<double> samples;
  constexpr int kRuns = 10'000;
  for (int i = 0; i < kRuns; ++i) {
    auto pts = sample_ppp(1.0, w, rng);
    std::vector<Point> with_origin{{0.0, 0.0}};
    with_origin.insert(with_origin.end(), pts.points().begin(), pts.points().end());
    const auto d = half_nn_distance(PointSet(with_origin, 1.0, w), 0);
    REQUIRE(d.has_value());
    samples.push_back(*d);
  }
  const double ks = stats::ks_statistic(samples, [](double r) { return -std::expm1(-4.0 * kPi * r * r); });
  CHECK(ks < stats::ks_critical_5pct(kRuns));
}

TEST_CASE("window_radius_for") {
  CHECK(window_radius_for(std::exp(-kPi), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(window_radius_for(1e-6, 1.0) == doctest::Approx(2.0970487818066073).epsilon(1e-14));
  const double r = window_radius_for(1e-6, 1.0);
  CHECK(std::exp(-kPi * r * r) == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(window_radius_for(1e-6, 4.0) == doctest::Approx(r / 2.0).epsilon(1e-14));
  CHECK(window_radius_for(1e-6, 0.01) == doctest::Approx(r * 10.0).epsilon(1e-14));
  CHECK_THROWS_AS(window_radius_for(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(window_radius_for(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(window_radius_for(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(window_radius_for(0.5, -1.0), std::domain_error);
}

TEST_CASE("estimate_origin_cell_area examples") {
  auto rng = make_stream(8);
  const DiskWindow probe(1.0);
  CHECK(estimate_origin_cell_area(PointSet({}, 1.0, DiskWindow(3.0)), probe, 1000, rng) ==
        doctest::Approx(kPi));
  // The bisector x = 1 is tangent to the probe window, so every probe hits.
  CHECK(estimate_origin_cell_area(PointSet({{2.0, 0.0}}, 1.0, DiskWindow(3.0)), probe, 5000, rng) ==
        doctest::Approx(kPi));
  CHECK_THROWS_AS(estimate_origin_cell_area(PointSet({}, 1.0, DiskWindow(3.0)), probe, 0, rng),
                  std::invalid_argument);
  // An eavesdropper at (1, 0) cuts off the circular segment beyond x = 1/2.
  const double cut = estimate_origin_cell_area(PointSet({{1.0, 0.0}}, 1.0, DiskWindow(3.0)),
                                               probe, 200'000, rng);
  const double segment = std::acos(0.5) - 0.5 * std::sqrt(0.75);
  CHECK(std::abs(cut - (kPi - segment)) < 0.01);
}

TEST_CASE("adding an eavesdropper never increases the coupled estimate") {
  auto rng = make_stream(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = random_points(8, 3.0, rng);
    const Seed probe_seed = rng();
    auto probes_a = make_stream(probe_seed);
    const double before = estimate_origin_cell_area(PointSet(pts, 1.0, DiskWindow(3.0)),
                                                    DiskWindow(2.0), 2000, probes_a);
    pts.push_back(random_points(1, 3.0, rng)[0]);
    auto probes_b = make_stream(probe_seed);
    const double after = estimate_origin_cell_area(PointSet(pts, 1.0, DiskWindow(3.0)),
                                                   DiskWindow(2.0), 2000, probes_b);
    CHECK(after <= before);
  }
}

TEST_CASE("origin_cell_radius_bound contains the cell") {
  auto rng = make_stream(41);
  CHECK(std::isinf(origin_cell_radius_bound({})));
  for (int trial = 0; trial < 300; ++trial) {
    const auto eves = random_points(40, 4.0, rng);
    const double bound = origin_cell_radius_bound(eves);
    if (!std::isfinite(bound)) continue;
    for (int k = 0; k < 200; ++k) {
      const double th = 2.0 * kPi * uniform01(rng);
      const double t = bound * 1.5 * uniform01(rng);
      const Point y{t * std::cos(th), t * std::sin(th)};
      bool inside = true;
      for (const auto& e : eves) inside = inside && (y.x * e.x + y.y * e.y <= 0.5 * squared_norm(e));
      if (inside) CHECK(t <= bound);
    }
  }
}

TEST_CASE("typical cell area has mean 1/lambda and a roughly gamma law") {
  auto rng = make_stream(53);
  std::vector<double> areas(2000);
  for (auto& a : areas) a = sample_typical_cell_area(1.0, 4000, rng);
  const auto m = stats::moments(areas);
  CHECK(std::abs(m.mean - 1.0) < 0.02);
  const specfun::CellAreaLaw law;
  const double ks = stats::ks_statistic(areas, [&](double x) { return oracle::gamma_cdf(law.q(), law.b(), x); });
  CHECK(ks < 0.05);

  auto dense = make_stream(54);
  std::vector<double> scaled(500);
  for (auto& a : scaled) a = 4.0 * sample_typical_cell_area(4.0, 4000, dense);
  CHECK(std::abs(stats::moments(scaled).mean - 1.0) < 0.05);
}

TEST_CASE("NearestIndex grid agrees with brute force") {
  auto rng = make_stream(61);
  for (std::size_t n : {0u, 1u, 5u, 1023u, 1024u, 5000u}) {
    const auto pts = random_points(n, 10.0, rng);
    const NearestIndex index(pts);
    CHECK(index.uses_grid() == (n >= NearestIndex::kDefaultGridThreshold));
    for (int q = 0; q < 500; ++q) {
      const Point query{30.0 * (uniform01(rng) - 0.5), 30.0 * (uniform01(rng) - 0.5)};
      const auto a = index.nearest(query);
      const auto b = nearest_neighbor(query, pts);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->index == b->index);
        CHECK(a->distance == b->distance);
      }
    }
  }
}

}  // TEST_SUITE
