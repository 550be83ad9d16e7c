#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lorenz/rows.hpp"

namespace lorenz {

using Labels = std::vector<std::string>;

/// Finite signed vector measure on a finite partition: atom i carries the
/// value of the measure on the i-th block. The empty list is the zero measure.
class VectorMeasure {
 public:
  /// Checks arity, finiteness and label uniqueness; coordinates are kept
  /// bit-for-bit.
  static VectorMeasure validate(std::size_t dim, const std::vector<std::vector<double>>& atoms,
                                std::optional<Labels> labels = std::nullopt);
  static VectorMeasure validate(Rows atoms, std::optional<Labels> labels = std::nullopt);
  static VectorMeasure zero(std::size_t dim);

  std::size_t dimension() const noexcept { return atoms_.dim(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const double> atom(std::size_t i) const noexcept { return atoms_[i]; }
  const Rows& atoms() const noexcept { return atoms_; }
  const std::optional<Labels>& labels() const noexcept { return labels_; }

  /// Drops atoms whose vector is exactly zero (and their labels).
  VectorMeasure canonicalize() const;
  /// Total value on the whole space, the sum of all atoms.
  Vector total() const;

  bool operator==(const VectorMeasure&) const = default;

 private:
  VectorMeasure(Rows atoms, std::optional<Labels> labels)
      : atoms_(std::move(atoms)), labels_(std::move(labels)) {}

  Rows atoms_;
  std::optional<Labels> labels_;
};

/// Sum over atoms of the 1-norm of each atom vector.
double total_variation_mass(const VectorMeasure& m) noexcept;

/// Density of the measure with respect to its total variation on atom i,
/// i.e. the atom vector scaled to unit 1-norm.
Vector rn_direction(const VectorMeasure& m, std::size_t i);

/// Measure on the disjoint union: atoms of a followed by atoms of b.
VectorMeasure direct_sum(const VectorMeasure& a, const VectorMeasure& b);

/// Product measure on the product partition. Atom (i, j) is the
/// coordinate-wise product a_i * b_j; atoms are ordered by (i, j).
VectorMeasure coordinate_product(const VectorMeasure& a, const VectorMeasure& b);

/// n-dimensional complex measure, stored as 2n reals per atom with real and
/// imaginary parts interleaved (re_1, im_1, ..., re_n, im_n).
class ComplexVectorMeasure {
 public:
  static ComplexVectorMeasure validate(std::size_t dim, Rows interleaved);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const double> atom(std::size_t i) const noexcept { return atoms_[i]; }
  const Rows& interleaved() const noexcept { return atoms_; }

  bool operator==(const ComplexVectorMeasure&) const = default;

 private:
  ComplexVectorMeasure(std::size_t dim, Rows atoms) : dim_(dim), atoms_(std::move(atoms)) {}

  std::size_t dim_ = 0;
  Rows atoms_;
};

/// Real image of the complex measure in 2n dimensions.
VectorMeasure complex_embed(const ComplexVectorMeasure& c);

/// Coordinate-wise complex product of two interleaved vectors, expressed in
/// the real coordinates: (x1 y1 - x2 y2, x1 y2 + x2 y1, ...).
Vector isomorphic_product(std::span<const double> x, std::span<const double> y);

ComplexVectorMeasure complex_coordinate_product(const ComplexVectorMeasure& a,
                                                const ComplexVectorMeasure& b);

/// Non-atomic vector measure on an interval: the density is constant on
/// consecutive sub-intervals of the given lengths.
class PiecewiseDensityMeasure {
 public:
  static PiecewiseDensityMeasure validate(std::vector<double> lengths, Rows directions);
  static PiecewiseDensityMeasure empty(std::size_t dim);

  std::size_t dimension() const noexcept { return directions_.dim(); }
  std::size_t size() const noexcept { return lengths_.size(); }
  double length(std::size_t k) const noexcept { return lengths_[k]; }
  std::span<const double> direction(std::size_t k) const noexcept { return directions_[k]; }
  double total_length() const noexcept;

 private:
  PiecewiseDensityMeasure(std::vector<double> lengths, Rows directions)
      : lengths_(std::move(lengths)), directions_(std::move(directions)) {}

  std::vector<double> lengths_;
  Rows directions_;
};

/// Measure on the concatenated intervals.
PiecewiseDensityMeasure direct_sum(const PiecewiseDensityMeasure& a,
                                   const PiecewiseDensityMeasure& b);

/// Fine discrete stand-in: each piece is cut into `slices` equal parts and
/// every part becomes one atom (part length times the piece's direction).
VectorMeasure slice_uniform(const PiecewiseDensityMeasure& density, std::size_t slices);

}  // namespace lorenz
