#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lorenz/measure.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz {

/// Identifies one cell of a sphere partition. Bit k of `signs` set means
/// coordinate k is negative (zero counts as positive). `grid` holds the
/// barycentric grid index of the first n-1 absolute coordinates.
struct CellKey {
  std::uint32_t signs = 0;
  std::vector<int> grid;

  auto operator<=>(const CellKey&) const = default;
  bool operator==(const CellKey&) const = default;
};

inline constexpr std::size_t kMaxPartitionDimension = 6;

/// Partition of the 1-norm unit sphere into cells of 1-norm diameter below
/// delta. Each orthant face {x : sign pattern fixed, sum |x_k| = 1} is cut by
/// a grid of resolution r = ceil(2n / delta) on the absolute values
/// (a_1, ..., a_{n-1}); a_n = 1 - sum is implied. Two points of one cell
/// differ by less than 1/r in each of the first n-1 coordinates, so their
/// 1-norm distance is at most 2(n-1)/r < delta.
class SpherePartition {
 public:
  SpherePartition(std::size_t n, double delta);

  std::size_t dimension() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  int resolution() const noexcept { return r_; }

  /// Cell containing x, which must be nonzero; x is rescaled to unit 1-norm.
  CellKey cell_of(std::span<const double> x) const;
  /// A point of the cell with unit 1-norm (interior when the cell has one).
  Vector representative(const CellKey& key) const;

  /// Number of cells K (sign pattern times grid tuple with sum <= r).
  std::uint64_t cell_count() const;
  /// All cells in key order. Throws SizeGuard above 2^20 cells.
  std::vector<CellKey> cells() const;

  /// Largest 1-norm distance between corners of the cell's grid box,
  /// which bounds the cell diameter from above.
  double corner_diameter(const CellKey& key) const;
  /// 2(n-1)/r, the a-priori diameter bound.
  double diameter_bound() const noexcept;

 private:
  std::size_t n_;
  double delta_;
  int r_;
};

/// Throws DimensionGuard (n = 0 or n > 6) or DeltaOutOfRange (delta not in (0, 2]).
SpherePartition partition_sphere(std::size_t n, double delta);

/// Groups atoms by the cell of their direction and replaces every nonempty
/// group with `reps` copies of (group 1-norm mass) * u_k / reps, u_k the
/// cell representative. Cells appear in key order. Zero atoms are ignored.
VectorMeasure discretize(const VectorMeasure& m, const SpherePartition& part, std::size_t reps);

struct DiscretizationParams {
  double delta = 0.0;
  std::size_t reps = 1;
  double cube = 0.0;     // M: every relevant skeleton lies in [-M, M]^n
  double epsilon = 0.0;

  /// delta < epsilon / (4 n M)
  bool skeleton_condition(std::size_t n) const noexcept;
  /// reps^2 > 2 n mass1 mass2 / epsilon
  bool reps_condition(std::size_t n, double mass1, double mass2) const noexcept;
  /// Smallest N with N^2 > 2 n mass1 mass2 / epsilon.
  static std::size_t min_reps(std::size_t n, double mass1, double mass2, double epsilon);
};

/// (n / N^2 + 2 delta) * mass1 * mass2
double product_error_bound(const DiscretizationParams& p, double mass1, double mass2, std::size_t n);

/// 4 n M delta
double skeleton_bound(std::size_t n, double cube, double delta);

/// Smallest M with the skeleton of m inside [-M, M]^n: per coordinate, the
/// larger of the positive-part and negative-part sums.
double cube_constant(const VectorMeasure& m);

}  // namespace lorenz
