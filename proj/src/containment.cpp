#include "lorenz/containment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "lorenz/directions.hpp"
#include "lorenz/error.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

namespace {

// Points on the segment [0, total] are reached by a uniform lambda.
std::optional<Inside> on_main_diagonal(const Zonotope& z, std::span<const double> p, double tol) {
  const Vector total = z.total();
  const double tt = dot(total, total);
  double s = 0.0;
  if (tt > 0.0) s = std::clamp(dot(p, total) / tt, 0.0, 1.0);
  Vector q(total.size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = s * total[k];
  const double residual = distance1(q, p);
  if (residual > tol) return std::nullopt;
  return Inside{Vector(z.size(), s), residual};
}

}  // namespace

PointMembership contains_point(const Zonotope& z, std::span<const double> p, double tol) {
  if (p.size() != z.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "point and zonotope dimensions differ");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (auto quick = on_main_diagonal(z, p, tol)) return *quick;

  BoxL1Solution sol = solve_box_l1(z, p);
  if (sol.residual <= tol) return Inside{std::move(sol.lambda), sol.residual};
  const double violation = dot(sol.dual, p) - reach(z, sol.dual);
  if (violation > tol) return Outside{std::move(sol.dual), violation};
  // Indeterminate within tolerance.
  return Inside{std::move(sol.lambda), sol.residual};
}

Rows planar_breakpoint_directions(std::span<const Zonotope* const> zonotopes) {
  Rows dirs(2);
  for (double sx : {1.0, -1.0}) {
    for (double sy : {1.0, -1.0}) dirs.push_back(std::vector<double>{sx, sy});
  }
  for (const Zonotope* z : zonotopes) {
    for (std::size_t i = 0; i < z->size(); ++i) {
      auto g = z->generator(i);
      const double scale = std::max(std::abs(g[0]), std::abs(g[1]));
      if (scale == 0.0) continue;
      const double px = -g[1] / scale;
      const double py = g[0] / scale;
      dirs.push_back(std::vector<double>{px, py});
      dirs.push_back(std::vector<double>{-px, -py});
    }
  }
  return dirs;
}

namespace {

void require_same_dimension(const Zonotope& a, const Zonotope& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "zonotope dimensions " + std::to_string(a.dimension()) +
                                                  " and " + std::to_string(b.dimension()) + " differ");
  }
}

struct Scan {
  double max_violation = -std::numeric_limits<double>::infinity();
  Vector worst;
  bool violated = false;
  Vector witness;
  double witness_gap = 0.0;

  void visit(std::span<const double> d, double inner, double outer, const Tolerance& tol) {
    const double gap = inner - outer;
    if (gap > max_violation) {
      max_violation = gap;
      worst.assign(d.begin(), d.end());
    }
    if (tol.exceeds(inner, outer) && (!violated || gap > witness_gap)) {
      violated = true;
      witness.assign(d.begin(), d.end());
      witness_gap = gap;
    }
  }
};

}  // namespace

InclusionResult includes(const Zonotope& inner, const Zonotope& outer, const CompareMode& mode,
                         const Tolerance& tol) {
  require_same_dimension(inner, outer);
  const std::size_t n = inner.dimension();
  Scan scan;
  InclusionResult result;

  if (std::holds_alternative<Exact2d>(mode)) {
    if (n != 2) {
      throw Error(ErrorKind::Exact2dOnPlaneOnly, "exact mode needs dimension 2, got " + std::to_string(n));
    }
    const Zonotope* both[] = {&inner, &outer};
    const Rows dirs = planar_breakpoint_directions(both);
    const PlanarSupportIndex in_index(inner);
    const PlanarSupportIndex out_index(outer);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      auto d = dirs[i];
      scan.visit(d, in_index.reach(d[0], d[1]), out_index.reach(d[0], d[1]), tol);
    }
    result.verdict = scan.violated ? Verdict::Excluded : Verdict::Included;
  } else {
    const auto& sampled = std::get<Sampled>(mode);
    for_each_sign_vector(n, [&](std::span<const double> d) {
      scan.visit(d, reach(inner, d), reach(outer, d), tol);
    });
    const Rows dirs = sphere_directions(n, sampled.dirs, sampled.seed);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      scan.visit(dirs[i], reach(inner, dirs[i]), reach(outer, dirs[i]), tol);
    }
    result.verdict = scan.violated ? Verdict::Excluded : Verdict::NoViolationFound;
  }
  result.max_violation = scan.max_violation;
  if (scan.violated) result.witness = std::move(scan.witness);
  return result;
}

}  // namespace lorenz
