#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lorenz/measure.hpp"
#include "lorenz/rows.hpp"

namespace lorenz {

/// Zonotope { sum_i t_i g_i : t_i in [0, 1] } given by its generator list.
/// Contains the origin and the sum of all generators, and is centrally
/// symmetric about half that sum.
class Zonotope {
 public:
  explicit Zonotope(std::size_t dim) : gens_(dim) {}
  explicit Zonotope(Rows generators);

  std::size_t dimension() const noexcept { return gens_.dim(); }
  std::size_t size() const noexcept { return gens_.size(); }
  std::span<const double> generator(std::size_t i) const noexcept { return gens_[i]; }
  const Rows& generators() const noexcept { return gens_; }

  Vector total() const;
  Vector center() const;

  bool operator==(const Zonotope&) const = default;

 private:
  Rows gens_;
};

/// Lorenz hull of a discrete measure: the zonotope spanned by its nonzero
/// atoms, in atom order.
Zonotope hull_of(const VectorMeasure& m);

/// Support function sum_i max(0, <d, g_i>).
double reach(const Zonotope& z, std::span<const double> d) noexcept;

/// Point of the zonotope attaining reach(z, d): sum of generators with
/// positive inner product.
Vector support_point(const Zonotope& z, std::span<const double> d);

/// Merges generators that are exactly equal into one scaled generator. The
/// set is unchanged; order follows first occurrence.
Zonotope compact_generators(const Zonotope& z);

/// Lorenz skeleton of a discrete measure: the finite set of subset sums.
class SkeletonPointSet {
 public:
  explicit SkeletonPointSet(Rows points);

  std::size_t dimension() const noexcept { return points_.dim(); }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const double> point(std::size_t i) const noexcept { return points_[i]; }
  const Rows& points() const noexcept { return points_; }
  bool contains(std::span<const double> p) const;

 private:
  Rows points_;  // sorted, unique
};

inline constexpr std::size_t kMaxSkeletonAtoms = 20;

/// All 2^m subset sums, each accumulated in atom-index order; exact
/// duplicates collapse. Throws TooManyAtoms when m > 20.
SkeletonPointSet skeleton_points(const VectorMeasure& m);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

/// Counterclockwise vertex list of a planar zonotope, starting from the
/// lowest (then leftmost) vertex. Degenerate hulls give a segment (two
/// vertices) or a single point.
std::vector<Point2> zonogon_vertices(const Zonotope& z);

/// Area of a planar zonotope, sum over generator pairs of |g_i x g_j|.
double area_2d(const Zonotope& z);

}  // namespace lorenz
