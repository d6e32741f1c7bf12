#include "secrecy/pointprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace secrecy::pointprocess {

namespace {

constexpr double kPi = std::numbers::pi;

// Strict lexicographic order on (squared distance, x, y).
bool closer(double d2a, Point a, double d2b, Point b) noexcept {
  if (d2a != d2b) return d2a < d2b;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace

double norm(Point p) noexcept { return std::sqrt(squared_norm(p)); }

double distance(Point a, Point b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

DiskWindow::DiskWindow(double radius) : radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::domain_error("DiskWindow: radius must be positive and finite");
  }
}

double DiskWindow::area() const noexcept { return kPi * radius_ * radius_; }

bool DiskWindow::contains(Point p) const noexcept {
  return squared_norm(p) <= radius_ * radius_;
}

PointSet::PointSet(std::vector<Point> points, double density, DiskWindow window)
    : points_(std::move(points)), density_(density), window_(window) {
  if (!(density > 0.0)) throw std::domain_error("PointSet: density must be positive");
  // Sampled radii are R*sqrt(u) with u < 1; allow one ulp-scale of slack for rounding.
  const double limit = window_.radius() * (1.0 + 1e-12);
  for (const auto& p : points_) {
    if (!(squared_norm(p) <= limit * limit)) {
      throw std::invalid_argument("PointSet: point outside window");
    }
  }
}

PointSet sample_ppp(double density, DiskWindow window, RandomStream& rng) {
  if (!(density > 0.0)) throw std::domain_error("sample_ppp: density must be positive");
  std::poisson_distribution<std::int64_t> count_dist(density * window.area());
  const auto n = static_cast<std::size_t>(count_dist(rng));
  std::vector<Point> pts;
  pts.reserve(n);
  const double radius = window.radius();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double theta = 2.0 * kPi * uniform01(rng);
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return PointSet(std::move(pts), density, window);
}

std::optional<Neighbor> nearest_neighbor(Point origin, std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dx = points[i].x - origin.x;
    const double dy = points[i].y - origin.y;
    const double d2 = dx * dx + dy * dy;
    if (i == 0 || closer(d2, points[i], best_d2, points[best])) {
      best = i;
      best_d2 = d2;
    }
  }
  return Neighbor{best, std::sqrt(best_d2)};
}

std::optional<double> nearest_distance(Point origin, const PointSet& set) {
  const auto nn = nearest_neighbor(origin, set.points());
  if (!nn) return std::nullopt;
  return nn->distance;
}

std::optional<double> half_nn_distance(const PointSet& set, std::size_t index) {
  if (index >= set.size()) throw std::out_of_range("half_nn_distance: index out of range");
  const Point self = set[index];
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i == index) continue;
    const double dx = set[i].x - self.x;
    const double dy = set[i].y - self.y;
    best_d2 = std::min(best_d2, dx * dx + dy * dy);
  }
  if (!std::isfinite(best_d2)) return std::nullopt;
  return 0.5 * std::sqrt(best_d2);
}

double window_radius_for(double epsilon, double density) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("window_radius_for: epsilon must lie in (0, 1)");
  }
  if (!(density > 0.0) || !std::isfinite(density)) {
    throw std::domain_error("window_radius_for: density must be positive");
  }
  return std::sqrt(-std::log(epsilon) / (kPi * density));
}

double origin_cell_radius_bound(std::span<const Point> eves) {
  // A cell point y = t*u and an eavesdropper e in the same 60-degree sector make an
  // angle below 60 degrees, so t*|e|*cos <= |e|^2/2 forces t <= |e|.
  constexpr int kSectors = 6;
  double nearest[kSectors];
  std::fill(std::begin(nearest), std::end(nearest), std::numeric_limits<double>::infinity());
  for (const auto& e : eves) {
    const double r = norm(e);
    if (r == 0.0) return 0.0;
    const double angle = std::atan2(e.y, e.x) + kPi;  // [0, 2pi]
    int sector = static_cast<int>(angle / (kPi / 3.0));
    sector = std::clamp(sector, 0, kSectors - 1);
    nearest[sector] = std::min(nearest[sector], r);
  }
  double bound = 0.0;
  for (double r : nearest) bound = std::max(bound, r);
  // Relative slack absorbs rounding in the sector assignment near sector edges.
  return bound * (1.0 + 1e-9);
}

double estimate_origin_cell_area(const PointSet& eves, DiskWindow probe_window,
                                 std::size_t n_probes, RandomStream& rng) {
  if (n_probes == 0) throw std::invalid_argument("estimate_origin_cell_area: n_probes must be >= 1");
  const double radius = probe_window.radius();

  // Only eavesdroppers within 2R can exclude a probe with |y| <= R. Sorting by norm
  // lets the nearest ones (which exclude most probes) be tested first.
  std::vector<Point> relevant;
  for (const auto& e : eves.points()) {
    if (norm(e) <= 2.0 * radius) relevant.push_back(e);
  }
  std::sort(relevant.begin(), relevant.end(), [](Point a, Point b) {
    return closer(squared_norm(a), a, squared_norm(b), b);
  });
  std::vector<double> half_sq(relevant.size());
  for (std::size_t i = 0; i < relevant.size(); ++i) half_sq[i] = 0.5 * squared_norm(relevant[i]);

  std::size_t hits = 0;
  for (std::size_t k = 0; k < n_probes; ++k) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double theta = 2.0 * kPi * uniform01(rng);
    const Point y{r * std::cos(theta), r * std::sin(theta)};
    bool inside = true;
    for (std::size_t i = 0; i < relevant.size(); ++i) {
      // |y|^2 <= |y - e|^2  <=>  y.e <= |e|^2 / 2
      if (y.x * relevant[i].x + y.y * relevant[i].y > half_sq[i]) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n_probes) * probe_window.area();
}

double sample_typical_cell_area(double density, std::size_t n_probes, RandomStream& rng) {
  const double reach = window_radius_for(1e-12, density);
  const PointSet neighbours = sample_ppp(density, DiskWindow(2.0 * reach), rng);
  const double probe_radius = std::min(origin_cell_radius_bound(neighbours.points()), reach);
  if (probe_radius <= 0.0) return 0.0;
  return estimate_origin_cell_area(neighbours, DiskWindow(probe_radius), n_probes, rng);
}

NearestIndex::NearestIndex(std::span<const Point> points, std::size_t grid_threshold)
    : points_(points.begin(), points.end()) {
  if (points_.size() < grid_threshold || points_.empty()) return;

  double max_x = points_[0].x;
  double max_y = points_[0].y;
  min_x_ = points_[0].x;
  min_y_ = points_[0].y;
  for (const auto& p : points_) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double width = std::max(max_x - min_x_, 1e-12);
  const double height = std::max(max_y - min_y_, 1e-12);
  cell_ = std::sqrt(2.0 * width * height / static_cast<double>(points_.size()));
  nx_ = static_cast<std::size_t>(width / cell_) + 1;
  ny_ = static_cast<std::size_t>(height / cell_) + 1;

  std::vector<std::uint32_t> counts(nx_ * ny_ + 1, 0);
  std::vector<std::size_t> cell_index(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const std::size_t c = cell_of(points_[i].y, min_y_, ny_) * nx_ + cell_of(points_[i].x, min_x_, nx_);
    cell_index[i] = c;
    ++counts[c + 1];
  }
  for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
  cell_start_ = counts;
  cell_items_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    cell_items_[counts[cell_index[i]]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t NearestIndex::cell_of(double coord, double lo, std::size_t n) const noexcept {
  const double f = std::floor((coord - lo) / cell_);
  if (!(f > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(f), n - 1);
}

std::optional<Neighbor> NearestIndex::nearest(Point query) const {
  if (!uses_grid()) return nearest_neighbor(query, points_);

  const auto cx = static_cast<std::ptrdiff_t>(cell_of(query.x, min_x_, nx_));
  const auto cy = static_cast<std::ptrdiff_t>(cell_of(query.y, min_y_, ny_));
  const auto nx = static_cast<std::ptrdiff_t>(nx_);
  const auto ny = static_cast<std::ptrdiff_t>(ny_);
  const std::ptrdiff_t max_ring = std::max(nx, ny);

  bool found = false;
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  auto scan_cell = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    if (x < 0 || y < 0 || x >= nx || y >= ny) return;
    const auto c = static_cast<std::size_t>(y * nx + x);
    for (std::uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
      const std::uint32_t i = cell_items_[k];
      const double dx = points_[i].x - query.x;
      const double dy = points_[i].y - query.y;
      const double d2 = dx * dx + dy * dy;
      if (!found || closer(d2, points_[i], best_d2, points_[best])) {
        found = true;
        best = i;
        best_d2 = d2;
      }
    }
  };

  for (std::ptrdiff_t ring = 0; ring <= max_ring; ++ring) {
    for (std::ptrdiff_t dy = -ring; dy <= ring; ++dy) {
      if (dy == -ring || dy == ring) {
        for (std::ptrdiff_t dx = -ring; dx <= ring; ++dx) scan_cell(cx + dx, cy + dy);
      } else {
        scan_cell(cx - ring, cy + dy);
        if (ring != 0) scan_cell(cx + ring, cy + dy);
      }
    }
    // Every cell beyond this ring is at least ring * cell_ away from the query. A tie
    // at exactly that distance must still be examined, hence the strict comparison.
    const double reach = static_cast<double>(ring) * cell_;
    if (found && best_d2 < reach * reach) break;
  }
  return Neighbor{best, std::sqrt(best_d2)};
}

}  // namespace secrecy::pointprocess
