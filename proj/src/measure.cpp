#include "lorenz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

void check_finite(std::span<const double> row, std::size_t index, const char* what) {
  for (double x : row) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::NonFiniteValue,
                  std::string(what) + " " + std::to_string(index) + " has a non-finite coordinate");
    }
  }
}

void check_labels(const std::optional<Labels>& labels, std::size_t atoms) {
  if (!labels) return;
  if (labels->size() != atoms) {
    throw Error(ErrorKind::DimensionMismatch, "label count " + std::to_string(labels->size()) +
                                                  " differs from atom count " + std::to_string(atoms));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : *labels) {
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeats");
  }
}

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

VectorMeasure VectorMeasure::validate(std::size_t dim, const std::vector<std::vector<double>>& atoms,
                                      std::optional<Labels> labels) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  Rows rows(dim);
  rows.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "atom " + std::to_string(i) + " has " +
                                                    std::to_string(atoms[i].size()) +
                                                    " coordinates, expected " + std::to_string(dim));
    }
    check_finite(atoms[i], i, "atom");
    rows.push_back(atoms[i]);
  }
  check_labels(labels, rows.size());
  return VectorMeasure(std::move(rows), std::move(labels));
}

VectorMeasure VectorMeasure::validate(Rows atoms, std::optional<Labels> labels) {
  if (atoms.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  for (std::size_t i = 0; i < atoms.size(); ++i) check_finite(atoms[i], i, "atom");
  check_labels(labels, atoms.size());
  return VectorMeasure(std::move(atoms), std::move(labels));
}

VectorMeasure VectorMeasure::zero(std::size_t dim) { return validate(Rows(dim)); }

VectorMeasure VectorMeasure::canonicalize() const {
  Rows kept(dimension());
  std::optional<Labels> kept_labels;
  if (labels_) kept_labels.emplace();
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_zero(atom(i))) continue;
    kept.push_back(atom(i));
    if (labels_) kept_labels->push_back((*labels_)[i]);
  }
  return VectorMeasure(std::move(kept), std::move(kept_labels));
}

Vector VectorMeasure::total() const {
  Vector t(dimension(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto a = atom(i);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += a[k];
  }
  return t;
}

double total_variation_mass(const VectorMeasure& m) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += norm1(m.atom(i));
  return s;
}

Vector rn_direction(const VectorMeasure& m, std::size_t i) {
  if (i >= m.size()) throw Error(ErrorKind::InvalidArgument, "atom index out of range");
  auto a = m.atom(i);
  const double mass = norm1(a);
  if (mass == 0.0) throw Error(ErrorKind::ZeroAtom, "atom " + std::to_string(i) + " is zero");
  Vector u(a.begin(), a.end());
  for (double& x : u) x /= mass;
  return u;
}

VectorMeasure direct_sum(const VectorMeasure& a, const VectorMeasure& b) {
  require_same_dimension(a.dimension(), b.dimension());
  Rows atoms(a.dimension());
  atoms.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) atoms.push_back(a.atom(i));
  for (std::size_t i = 0; i < b.size(); ++i) atoms.push_back(b.atom(i));

  std::optional<Labels> labels;
  if (a.labels() || b.labels()) {
    labels.emplace();
    auto add = [&](const VectorMeasure& m, const std::string& prefix) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        labels->push_back(prefix + (m.labels() ? (*m.labels())[i] : std::to_string(i)));
      }
    };
    add(a, "a:");
    add(b, "b:");
  }
  return VectorMeasure::validate(std::move(atoms), std::move(labels));
}

VectorMeasure coordinate_product(const VectorMeasure& a, const VectorMeasure& b) {
  require_same_dimension(a.dimension(), b.dimension());
  const std::size_t n = a.dimension();
  Rows atoms(n);
  atoms.reserve(a.size() * b.size());
  Vector buf(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a.atom(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto y = b.atom(j);
      for (std::size_t k = 0; k < n; ++k) buf[k] = x[k] * y[k];
      atoms.push_back(buf);
    }
  }
  std::optional<Labels> labels;
  if (a.labels() && b.labels()) {
    labels.emplace();
    for (const auto& la : *a.labels()) {
      for (const auto& lb : *b.labels()) labels->push_back("(" + la + "," + lb + ")");
    }
  }
  return VectorMeasure::validate(std::move(atoms), std::move(labels));
}

ComplexVectorMeasure ComplexVectorMeasure::validate(std::size_t dim, Rows interleaved) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  if (interleaved.dim() != 2 * dim) {
    throw Error(ErrorKind::DimensionMismatch, "complex atoms need " + std::to_string(2 * dim) +
                                                  " interleaved reals, got " +
                                                  std::to_string(interleaved.dim()));
  }
  for (std::size_t i = 0; i < interleaved.size(); ++i) check_finite(interleaved[i], i, "atom");
  return ComplexVectorMeasure(dim, std::move(interleaved));
}

VectorMeasure complex_embed(const ComplexVectorMeasure& c) {
  // The storage already has the (re, im) layout of the embedding.
  return VectorMeasure::validate(c.interleaved());
}

Vector isomorphic_product(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch, "isomorphic product needs equal even lengths");
  }
  Vector out(x.size());
  for (std::size_t k = 0; k < x.size(); k += 2) {
    out[k] = x[k] * y[k] - x[k + 1] * y[k + 1];
    out[k + 1] = x[k] * y[k + 1] + x[k + 1] * y[k];
  }
  return out;
}

ComplexVectorMeasure complex_coordinate_product(const ComplexVectorMeasure& a,
                                                const ComplexVectorMeasure& b) {
  require_same_dimension(a.dimension(), b.dimension());
  Rows atoms(2 * a.dimension());
  atoms.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) atoms.push_back(isomorphic_product(a.atom(i), b.atom(j)));
  }
  return ComplexVectorMeasure::validate(a.dimension(), std::move(atoms));
}

PiecewiseDensityMeasure PiecewiseDensityMeasure::validate(std::vector<double> lengths, Rows directions) {
  if (directions.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  if (lengths.size() != directions.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one length per direction is required");
  }
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (!std::isfinite(lengths[k])) throw Error(ErrorKind::NonFiniteValue, "piece length is not finite");
    if (!(lengths[k] > 0.0)) throw Error(ErrorKind::InvalidArgument, "piece lengths must be positive");
    check_finite(directions[k], k, "direction");
  }
  return PiecewiseDensityMeasure(std::move(lengths), std::move(directions));
}

PiecewiseDensityMeasure PiecewiseDensityMeasure::empty(std::size_t dim) {
  return validate({}, Rows(dim));
}

double PiecewiseDensityMeasure::total_length() const noexcept {
  double s = 0.0;
  for (double l : lengths_) s += l;
  return s;
}

PiecewiseDensityMeasure direct_sum(const PiecewiseDensityMeasure& a, const PiecewiseDensityMeasure& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<double> lengths;
  Rows dirs(a.dimension());
  for (const auto* d : {&a, &b}) {
    for (std::size_t k = 0; k < d->size(); ++k) {
      lengths.push_back(d->length(k));
      dirs.push_back(d->direction(k));
    }
  }
  return PiecewiseDensityMeasure::validate(std::move(lengths), std::move(dirs));
}

VectorMeasure slice_uniform(const PiecewiseDensityMeasure& density, std::size_t slices) {
  if (slices == 0) throw Error(ErrorKind::InvalidArgument, "slice count must be positive");
  const std::size_t n = density.dimension();
  Rows atoms(n);
  atoms.reserve(density.size() * slices);
  Vector buf(n);
  for (std::size_t k = 0; k < density.size(); ++k) {
    const double part = density.length(k) / static_cast<double>(slices);
    auto dir = density.direction(k);
    for (std::size_t c = 0; c < n; ++c) buf[c] = part * dir[c];
    for (std::size_t s = 0; s < slices; ++s) atoms.push_back(buf);
  }
  return VectorMeasure::validate(std::move(atoms));
}

}  // namespace lorenz
