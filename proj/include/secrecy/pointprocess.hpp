#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "secrecy/random.hpp"

namespace secrecy::pointprocess {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_norm(Point p) noexcept { return p.x * p.x + p.y * p.y; }
double norm(Point p) noexcept;
double distance(Point a, Point b) noexcept;

/// Disk of the given radius centred at the origin; the finite stand-in for the plane.
class DiskWindow {
 public:
  /// Throws std::domain_error unless radius > 0.
  explicit DiskWindow(double radius);

  double radius() const noexcept { return radius_; }
  double area() const noexcept;
  bool contains(Point p) const noexcept;

 private:
  double radius_;
};

/// Immutable realization of a homogeneous Poisson process restricted to a disk window.
class PointSet {
 public:
  /// Throws std::invalid_argument if a point lies outside the window,
  /// std::domain_error if density <= 0.
  PointSet(std::vector<Point> points, double density, DiskWindow window);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  double density() const noexcept { return density_; }
  const DiskWindow& window() const noexcept { return window_; }

 private:
  std::vector<Point> points_;
  double density_;
  DiskWindow window_;
};

struct Neighbor {
  std::size_t index = 0;
  double distance = 0.0;
};

/// Count ~ Poisson(density * area); given the count, points i.i.d. uniform on the disk.
PointSet sample_ppp(double density, DiskWindow window, RandomStream& rng);

/// Nearest point to `origin` by brute force. Ties are broken lexicographically on
/// (distance, x, y) so the choice is deterministic even for coincident distances.
std::optional<Neighbor> nearest_neighbor(Point origin, std::span<const Point> points);

std::optional<double> nearest_distance(Point origin, const PointSet& set);

/// Half the distance from set[index] to its nearest other point, i.e. the distance
/// from that generator to the boundary of its Voronoi cell.
/// Throws std::out_of_range for an invalid index.
std::optional<double> half_nn_distance(const PointSet& set, std::size_t index);

/// Radius r with exp(-pi * density * r^2) = epsilon.
double window_radius_for(double epsilon, double density);

/// Upper bound on the distance from the origin to any point of the Voronoi cell of
/// the origin within {0} U eves. Uses the nearest eavesdropper in each of six 60-degree
/// sectors; returns +inf when some sector is empty (the cell may be unbounded).
double origin_cell_radius_bound(std::span<const Point> eves);

/// Hit-or-miss estimate of the area of the Voronoi cell of the origin in {0} U eves:
/// a probe y hits iff |y| <= |y - e| for every eavesdropper e.
/// Probes are drawn only from `rng`, so for a fixed stream they do not depend on `eves`.
/// Throws std::invalid_argument if n_probes == 0.
double estimate_origin_cell_area(const PointSet& eves, DiskWindow probe_window,
                                 std::size_t n_probes, RandomStream& rng);

/// Hit-or-miss sample of the area of a typical Voronoi cell of a PPP with the given
/// density (the cell of the origin in {0} U PPP). Neighbours are drawn in a window of
/// twice window_radius_for(1e-12, density); probes cover the smaller of that half-radius
/// and origin_cell_radius_bound, which contains the cell except with probability ~1e-12.
double sample_typical_cell_area(double density, std::size_t n_probes, RandomStream& rng);

/// Nearest-neighbour index. Brute force below `grid_threshold` points, otherwise a
/// uniform bucket grid with about two points per cell.
class NearestIndex {
 public:
  static constexpr std::size_t kDefaultGridThreshold = 1024;

  explicit NearestIndex(std::span<const Point> points,
                        std::size_t grid_threshold = kDefaultGridThreshold);

  std::optional<Neighbor> nearest(Point query) const;
  bool uses_grid() const noexcept { return !cell_start_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::size_t cell_of(double coord, double lo, std::size_t n) const noexcept;

  std::vector<Point> points_;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  double cell_ = 1.0;
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<std::uint32_t> cell_start_;
  std::vector<std::uint32_t> cell_items_;
};

}  // namespace secrecy::pointprocess
