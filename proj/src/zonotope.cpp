#include "lorenz/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

Zonotope::Zonotope(Rows generators) : gens_(std::move(generators)) {
  if (gens_.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  for (double x : gens_.flat()) {
    if (!std::isfinite(x)) throw Error(ErrorKind::NonFiniteValue, "generator has a non-finite coordinate");
  }
}

Vector Zonotope::total() const {
  Vector t(dimension(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto g = generator(i);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += g[k];
  }
  return t;
}

Vector Zonotope::center() const {
  Vector c = total();
  for (double& x : c) x *= 0.5;
  return c;
}

Zonotope hull_of(const VectorMeasure& m) {
  Rows gens(m.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!is_zero(m.atom(i))) gens.push_back(m.atom(i));
  }
  return Zonotope(std::move(gens));
}

double reach(const Zonotope& z, std::span<const double> d) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += std::max(0.0, dot(d, z.generator(i)));
  return s;
}

Vector support_point(const Zonotope& z, std::span<const double> d) {
  Vector p(z.dimension(), 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto g = z.generator(i);
    if (dot(d, g) > 0.0) {
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += g[k];
    }
  }
  return p;
}

Zonotope compact_generators(const Zonotope& z) {
  const std::size_t n = z.dimension();
  std::map<std::vector<double>, std::size_t> slot;
  std::vector<Vector> merged;
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto g = z.generator(i);
    Vector key(g.begin(), g.end());
    auto [it, inserted] = slot.try_emplace(key, merged.size());
    if (inserted) {
      merged.push_back(key);
    } else {
      Vector& acc = merged[it->second];
      for (std::size_t k = 0; k < n; ++k) acc[k] += g[k];
    }
  }
  Rows out(n);
  out.reserve(merged.size());
  for (const auto& g : merged) out.push_back(g);
  return Zonotope(std::move(out));
}

SkeletonPointSet::SkeletonPointSet(Rows points) : points_(points.sorted_unique()) {}

bool SkeletonPointSet::contains(std::span<const double> p) const {
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto row = points_[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), p.begin(), p.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == size()) return false;
  auto row = points_[lo];
  return std::equal(row.begin(), row.end(), p.begin(), p.end());
}

SkeletonPointSet skeleton_points(const VectorMeasure& m) {
  const std::size_t count = m.size();
  if (count > kMaxSkeletonAtoms) {
    throw Error(ErrorKind::TooManyAtoms, std::to_string(count) + " atoms exceed the skeleton limit of " +
                                             std::to_string(kMaxSkeletonAtoms));
  }
  const std::size_t n = m.dimension();
  const std::size_t subsets = std::size_t{1} << count;
  std::vector<double> sums(subsets * n, 0.0);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t high = 0;
    while ((mask >> (high + 1)) != 0) ++high;
    const std::size_t rest = mask ^ (std::size_t{1} << high);
    auto atom = m.atom(high);
    for (std::size_t k = 0; k < n; ++k) sums[mask * n + k] = sums[rest * n + k] + atom[k];
  }
  return SkeletonPointSet(Rows(n, std::move(sums)));
}

namespace {

void require_plane(const Zonotope& z) {
  if (z.dimension() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "planar operation on a " + std::to_string(z.dimension()) +
                                                  "-dimensional zonotope");
  }
}

struct Normalized {
  std::vector<Point2> gens;  // upper half-plane, sorted by angle, parallel ones merged
  Point2 offset;             // sum of the flipped originals
};

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

Normalized normalize_planar(const Zonotope& z) {
  Normalized out;
  std::vector<std::pair<double, Point2>> keyed;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Point2 g{z.generator(i)[0], z.generator(i)[1]};
    if (g.x == 0.0 && g.y == 0.0) continue;
    if (g.y < 0.0 || (g.y == 0.0 && g.x < 0.0)) {
      out.offset.x += g.x;
      out.offset.y += g.y;
      g = {-g.x, -g.y};
    }
    keyed.emplace_back(std::atan2(g.y, g.x) + 0.0, g);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [angle, g] : keyed) {
    if (!out.gens.empty()) {
      Point2& last = out.gens.back();
      const double scale = std::hypot(last.x, last.y) * std::hypot(g.x, g.y);
      if (std::abs(cross(last, g)) <= 1e-15 * scale) {
        last.x += g.x;
        last.y += g.y;
        continue;
      }
    }
    out.gens.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Point2> zonogon_vertices(const Zonotope& z) {
  require_plane(z);
  const Normalized norm = normalize_planar(z);
  std::vector<Point2> vertices{norm.offset};
  if (norm.gens.empty()) return vertices;

  Point2 v = norm.offset;
  for (const Point2& g : norm.gens) {
    v = {v.x + g.x, v.y + g.y};
    vertices.push_back(v);
  }
  if (norm.gens.size() == 1) return vertices;
  for (std::size_t i = 0; i + 1 < norm.gens.size(); ++i) {
    v = {v.x - norm.gens[i].x, v.y - norm.gens[i].y};
    vertices.push_back(v);
  }
  return vertices;
}

double area_2d(const Zonotope& z) {
  require_plane(z);
  const Normalized norm = normalize_planar(z);
  // Sorted by angle in [0, pi), so g_i x g_j >= 0 for i < j and the pair sum
  // telescopes into prefix sums.
  double area = 0.0;
  Point2 prefix;
  for (const Point2& g : norm.gens) {
    area += cross(prefix, g);
    prefix = {prefix.x + g.x, prefix.y + g.y};
  }
  return std::max(0.0, area);
}

}  // namespace lorenz
