#include "lorenz/rows.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ZeroAtom: return "ZeroAtom";
    case ErrorKind::TooManyAtoms: return "TooManyAtoms";
    case ErrorKind::Exact2dOnPlaneOnly: return "Exact2dOnPlaneOnly";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InvalidTransform: return "InvalidTransform";
    case ErrorKind::NegativeAtom: return "NegativeAtom";
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::DimensionGuard: return "DimensionGuard";
    case ErrorKind::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorKind::NotInHull: return "NotInHull";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
  }
  return "Error";
}

Rows::Rows(std::size_t dim, std::vector<double> flat) : dim_(dim), data_(std::move(flat)) {
  if (dim_ == 0 || data_.size() % dim_ != 0) {
    throw Error(ErrorKind::DimensionMismatch, "flat storage is not a whole number of rows");
  }
}

void Rows::push_back(std::span<const double> row) {
  if (row.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "row has length " + std::to_string(row.size()) +
                                                  ", expected " + std::to_string(dim_));
  }
  data_.insert(data_.end(), row.begin(), row.end());
}

namespace {

std::vector<std::size_t> lexicographic_order(const Rows& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = rows[a];
    auto rb = rows[b];
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  return order;
}

}  // namespace

Rows Rows::sorted() const {
  Rows out(dim_);
  out.reserve(size());
  for (std::size_t i : lexicographic_order(*this)) out.push_back((*this)[i]);
  return out;
}

Rows Rows::sorted_unique() const {
  Rows out(dim_);
  for (std::size_t i : lexicographic_order(*this)) {
    auto row = (*this)[i];
    if (!out.empty()) {
      auto last = out[out.size() - 1];
      if (std::equal(row.begin(), row.end(), last.begin())) continue;
    }
    out.push_back(row);
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm1(std::span<const double> a) noexcept {
  double s = 0.0;
  for (double x : a) s += std::abs(x);
  return s;
}

double norm_inf(std::span<const double> a) noexcept {
  double s = 0.0;
  for (double x : a) s = std::max(s, std::abs(x));
  return s;
}

double distance1(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
  return s;
}

bool is_zero(std::span<const double> a) noexcept {
  return std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; });
}

Vector hadamard(std::span<const double> a, std::span<const double> b) {
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

}  // namespace lorenz
