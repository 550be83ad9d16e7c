#include "lorenz/lorenz_ops.hpp"

#include <algorithm>
#include <cmath>

#include "lorenz/directions.hpp"
#include "lorenz/error.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

Zonotope lorenz_product(const Zonotope& h1, const Zonotope& h2) {
  require_same_dimension(h1.dimension(), h2.dimension());
  const std::size_t n = h1.dimension();
  Rows gens(n);
  gens.reserve(h1.size() * h2.size());
  Vector buf(n);
  for (std::size_t i = 0; i < h1.size(); ++i) {
    auto g = h1.generator(i);
    for (std::size_t j = 0; j < h2.size(); ++j) {
      auto h = h2.generator(j);
      for (std::size_t k = 0; k < n; ++k) buf[k] = g[k] * h[k];
#ifdef LORENZ_MUTANT_PRODUCT
      // Deliberate fault for the mutation check: negate the first product.
      if (i == 0 && j == 0) {
        for (auto& x : buf) x = -x;
      }
#endif
      if (!is_zero(buf)) gens.push_back(buf);
    }
  }
  return Zonotope(std::move(gens));
}

Zonotope minkowski_sum(const Zonotope& h1, const Zonotope& h2) {
  require_same_dimension(h1.dimension(), h2.dimension());
  Rows gens = h1.generators();
  for (std::size_t j = 0; j < h2.size(); ++j) gens.push_back(h2.generator(j));
  return Zonotope(std::move(gens));
}

Zonotope identity_hull(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  return Zonotope(Rows(n, std::vector<double>(n, 1.0)));
}

HullComparison compare_hulls(const Zonotope& h1, const Zonotope& h2, const CompareMode& mode,
                             const Tolerance& tol) {
  require_same_dimension(h1.dimension(), h2.dimension());
  const std::size_t n = h1.dimension();
  HullComparison out;
  auto visit = [&](std::span<const double> d, double r1, double r2) {
    const double gap = std::abs(r1 - r2);
    if (!tol.close(r1, r2) && (out.equal || gap > out.max_gap)) {
      out.equal = false;
      out.witness.assign(d.begin(), d.end());
    }
    out.max_gap = std::max(out.max_gap, gap);
  };

  if (std::holds_alternative<Exact2d>(mode)) {
    if (n != 2) {
      throw Error(ErrorKind::Exact2dOnPlaneOnly, "exact mode needs dimension 2, got " + std::to_string(n));
    }
    const Zonotope* both[] = {&h1, &h2};
    const Rows dirs = planar_breakpoint_directions(both);
    const PlanarSupportIndex i1(h1);
    const PlanarSupportIndex i2(h2);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      auto d = dirs[i];
      visit(d, i1.reach(d[0], d[1]), i2.reach(d[0], d[1]));
    }
  } else {
    const auto& sampled = std::get<Sampled>(mode);
    for_each_sign_vector(n, [&](std::span<const double> d) { visit(d, reach(h1, d), reach(h2, d)); });
    const Rows dirs = sphere_directions(n, sampled.dirs, sampled.seed);
    for (std::size_t i = 0; i < dirs.size(); ++i) visit(dirs[i], reach(h1, dirs[i]), reach(h2, dirs[i]));
  }
  return out;
}

namespace {

bool positively_proportional(std::span<const double> a, std::span<const double> b) {
  if (is_zero(a) || is_zero(b) || dot(a, b) <= 0.0) return false;
  const double scale = norm1(a) * norm1(b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t l = k + 1; l < a.size(); ++l) {
      if (std::abs(a[k] * b[l] - a[l] * b[k]) > 1e-12 * scale) return false;
    }
  }
  return true;
}

Rows apply_step(const Rows& atoms, const TransformStep& step) {
  const std::size_t n = atoms.dim();
  const std::size_t m = atoms.size();
  Rows out(n);
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidTransform, why); };

  if (const auto* s = std::get_if<SplitAtom>(&step)) {
    if (s->index >= m) throw bad("split index out of range");
    if (!(s->fraction > 0.0 && s->fraction < 1.0)) throw bad("split fraction must lie in (0, 1)");
    for (std::size_t i = 0; i < m; ++i) {
      if (i != s->index) {
        out.push_back(atoms[i]);
        continue;
      }
      Vector first(n), second(n);
      for (std::size_t k = 0; k < n; ++k) {
        first[k] = s->fraction * atoms[i][k];
        second[k] = atoms[i][k] - first[k];
      }
      out.push_back(first);
      out.push_back(second);
    }
  } else if (const auto* mc = std::get_if<MergeColinear>(&step)) {
    if (mc->first >= m || mc->second >= m || mc->first == mc->second) throw bad("merge indices invalid");
    if (!positively_proportional(atoms[mc->first], atoms[mc->second])) {
      throw bad("merged atoms are not positively proportional");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == mc->second) continue;
      if (i != mc->first) {
        out.push_back(atoms[i]);
        continue;
      }
      Vector merged(n);
      for (std::size_t k = 0; k < n; ++k) merged[k] = atoms[mc->first][k] + atoms[mc->second][k];
      out.push_back(merged);
    }
  } else if (const auto* p = std::get_if<Permute>(&step)) {
    if (p->order.size() != m) throw bad("permutation has the wrong length");
    std::vector<bool> seen(m, false);
    for (std::size_t idx : p->order) {
      if (idx >= m || seen[idx]) throw bad("order is not a permutation");
      seen[idx] = true;
      out.push_back(atoms[idx]);
    }
  } else {
    const auto& z = std::get<InsertZeroAtom>(step);
    if (z.position > m) throw bad("insert position out of range");
    const Vector zero(n, 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == z.position) out.push_back(zero);
      if (i < m) out.push_back(atoms[i]);
    }
  }
  return out;
}

}  // namespace

VectorMeasure apply_transform(const VectorMeasure& m, const HullTransformSpec& t) {
  Rows atoms = m.atoms();
  for (const auto& step : t) atoms = apply_step(atoms, step);
  return VectorMeasure::validate(std::move(atoms));
}

SkeletonPointSet skeleton_product(const VectorMeasure& m1, const VectorMeasure& m2) {
  require_same_dimension(m1.dimension(), m2.dimension());
  if (m1.size() * m2.size() > kMaxSkeletonAtoms) {
    throw Error(ErrorKind::TooManyAtoms, "product has " + std::to_string(m1.size() * m2.size()) +
                                             " atoms, limit is " + std::to_string(kMaxSkeletonAtoms));
  }
  return skeleton_points(coordinate_product(m1, m2));
}

}  // namespace lorenz
