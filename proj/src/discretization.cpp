#include "lorenz/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lorenz/error.hpp"

namespace lorenz {

SpherePartition::SpherePartition(std::size_t n, double delta) : n_(n), delta_(delta) {
  if (n == 0 || n > kMaxPartitionDimension) {
    throw Error(ErrorKind::DimensionGuard, "sphere partitions support 1 <= n <= 6, got " + std::to_string(n));
  }
  if (!(delta > 0.0 && delta <= 2.0)) {
    throw Error(ErrorKind::DeltaOutOfRange, "delta must lie in (0, 2]");
  }
  r_ = static_cast<int>(std::ceil(2.0 * static_cast<double>(n) / delta));
}

CellKey SpherePartition::cell_of(std::span<const double> x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from partition");
  const double mass = norm1(x);
  if (mass == 0.0) throw Error(ErrorKind::ZeroAtom, "the zero vector has no direction");
  CellKey key;
  for (std::size_t k = 0; k < n_; ++k) {
    if (x[k] < 0.0) key.signs |= std::uint32_t{1} << k;
  }
  key.grid.resize(n_ - 1);
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    const double a = std::abs(x[k]) / mass;
    key.grid[k] = std::min(static_cast<int>(std::floor(a * r_)), r_ - 1);
  }
  return key;
}

Vector SpherePartition::representative(const CellKey& key) const {
  int used = 0;
  for (int g : key.grid) used += g;
  const double tau =
      used < r_ ? std::min(0.5, static_cast<double>(r_ - used) / static_cast<double>(n_)) : 0.0;
  Vector u(n_);
  double rest = 1.0;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    u[k] = (key.grid[k] + tau) / r_;
    rest -= u[k];
  }
  u[n_ - 1] = std::max(0.0, rest);
  for (std::size_t k = 0; k < n_; ++k) {
    if ((key.signs >> k) & 1u) u[k] = -u[k];
  }
  return u;
}

namespace {

// Number of grid tuples in [0, r-1]^d with coordinate sum <= r.
std::uint64_t grid_tuple_count(std::size_t d, int r) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(r) + 1, 0);
  ways[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= r; ++s) {
      if (!ways[s]) continue;
      for (int g = 0; g < r && s + g <= r; ++g) next[s + g] += ways[s];
    }
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

}  // namespace

std::uint64_t SpherePartition::cell_count() const {
  return (std::uint64_t{1} << n_) * grid_tuple_count(n_ - 1, r_);
}

std::vector<CellKey> SpherePartition::cells() const {
  if (cell_count() > (std::uint64_t{1} << 20)) {
    throw Error(ErrorKind::SizeGuard, "too many cells to list");
  }
  std::vector<std::vector<int>> tuples{{}};
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples) {
      int used = 0;
      for (int g : t) used += g;
      for (int g = 0; g < r_ && used + g <= r_; ++g) {
        auto extended = t;
        extended.push_back(g);
        next.push_back(std::move(extended));
      }
    }
    tuples.swap(next);
  }
  std::vector<CellKey> out;
  for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << n_); ++signs) {
    for (const auto& t : tuples) out.push_back({signs, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

double SpherePartition::corner_diameter(const CellKey& key) const {
  const std::size_t d = n_ - 1;
  const std::size_t corners = std::size_t{1} << d;
  std::vector<Vector> pts;
  for (std::size_t c = 0; c < corners; ++c) {
    Vector a(n_);
    double rest = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      a[k] = (key.grid[k] + ((c >> k) & 1u)) / static_cast<double>(r_);
      rest -= a[k];
    }
    a[d] = rest;
    pts.push_back(std::move(a));
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) diameter = std::max(diameter, distance1(pts[i], pts[j]));
  }
  return diameter;
}

double SpherePartition::diameter_bound() const noexcept {
  return 2.0 * static_cast<double>(n_ - 1) / r_;
}

SpherePartition partition_sphere(std::size_t n, double delta) { return SpherePartition(n, delta); }

VectorMeasure discretize(const VectorMeasure& m, const SpherePartition& part, std::size_t reps) {
  if (reps == 0) throw Error(ErrorKind::InvalidArgument, "reps must be positive");
  if (m.dimension() != part.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "measure and partition dimensions differ");
  }
  std::map<CellKey, double> buckets;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto a = m.atom(i);
    if (is_zero(a)) continue;
    buckets[part.cell_of(a)] += norm1(a);
  }
  const std::size_t n = m.dimension();
  Rows atoms(n);
  atoms.reserve(buckets.size() * reps);
  Vector atom(n);
  for (const auto& [key, mass] : buckets) {
    const Vector u = part.representative(key);
    for (std::size_t k = 0; k < n; ++k) atom[k] = mass * u[k] / static_cast<double>(reps);
    for (std::size_t c = 0; c < reps; ++c) atoms.push_back(atom);
  }
  return VectorMeasure::validate(std::move(atoms));
}

bool DiscretizationParams::skeleton_condition(std::size_t n) const noexcept {
  return delta < epsilon / (4.0 * static_cast<double>(n) * cube);
}

bool DiscretizationParams::reps_condition(std::size_t n, double mass1, double mass2) const noexcept {
  const double r = static_cast<double>(reps);
  return r * r > 2.0 * static_cast<double>(n) * mass1 * mass2 / epsilon;
}

std::size_t DiscretizationParams::min_reps(std::size_t n, double mass1, double mass2, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const double need = 2.0 * static_cast<double>(n) * mass1 * mass2 / epsilon;
  auto reps = static_cast<std::size_t>(std::max(1.0, std::floor(std::sqrt(need))));
  while (static_cast<double>(reps) * static_cast<double>(reps) <= need) ++reps;
  return reps;
}

double product_error_bound(const DiscretizationParams& p, double mass1, double mass2, std::size_t n) {
  const double reps = static_cast<double>(p.reps);
  return (static_cast<double>(n) / (reps * reps) + 2.0 * p.delta) * mass1 * mass2;
}

double skeleton_bound(std::size_t n, double cube, double delta) {
  return 4.0 * static_cast<double>(n) * cube * delta;
}

double cube_constant(const VectorMeasure& m) {
  double cube = 0.0;
  for (std::size_t k = 0; k < m.dimension(); ++k) {
    double pos = 0.0;
    double neg = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double x = m.atom(i)[k];
      (x > 0.0 ? pos : neg) += std::abs(x);
    }
    cube = std::max({cube, pos, neg});
  }
  return cube;
}

}  // namespace lorenz
