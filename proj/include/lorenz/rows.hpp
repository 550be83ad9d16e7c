#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lorenz {

using Vector = std::vector<double>;

/// Row-major list of equal-length real vectors. Atoms, generators and point
/// sets are all stored this way.
class Rows {
 public:
  Rows() = default;
  explicit Rows(std::size_t dim) : dim_(dim) {}
  Rows(std::size_t dim, std::vector<double> flat);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<double> operator[](std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }

  void push_back(std::span<const double> row);
  void reserve(std::size_t rows) { data_.reserve(rows * dim_); }

  const std::vector<double>& flat() const noexcept { return data_; }

  /// Rows sorted lexicographically, used for multiset comparisons.
  Rows sorted() const;
  /// Sorted with exact duplicates removed.
  Rows sorted_unique() const;

  bool operator==(const Rows&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double norm1(std::span<const double> a) noexcept;
double norm_inf(std::span<const double> a) noexcept;
double distance1(std::span<const double> a, std::span<const double> b) noexcept;
bool is_zero(std::span<const double> a) noexcept;
Vector hadamard(std::span<const double> a, std::span<const double> b);

}  // namespace lorenz
