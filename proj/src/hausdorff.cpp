#include "lorenz/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lorenz/containment.hpp"
#include "lorenz/directions.hpp"
#include "lorenz/error.hpp"
#include "lorenz/planar.hpp"

namespace lorenz {

namespace {

constexpr std::size_t kSampledDirections = 4096;

struct Best {
  double distance = -1.0;
  Vector witness;

  void offer(double value, std::span<const double> w) {
    if (value > distance) {
      distance = value;
      witness.assign(w.begin(), w.end());
    }
  }
};

// In the plane the support functions are linear on every cone between
// consecutive breakpoint rays, so |h1 - h2| on the boundary of the
// infinity-ball peaks at a breakpoint or a corner.
HausdorffResult planar(const Zonotope& z1, const Zonotope& z2) {
  const Zonotope* both[] = {&z1, &z2};
  const Rows dirs = planar_breakpoint_directions(both);
  const PlanarSupportIndex i1(z1);
  const PlanarSupportIndex i2(z2);
  Best best;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    auto u = dirs[i];
    best.offer(std::abs(i1.reach(u[0], u[1]) - i2.reach(u[0], u[1])), u);
  }
  return {best.distance, best.witness, false, HausdorffMode::Exact};
}

HausdorffResult line(const Zonotope& z1, const Zonotope& z2) {
  Best best;
  for (double s : {1.0, -1.0}) {
    const double u[] = {s};
    best.offer(std::abs(reach(z1, u) - reach(z2, u)), u);
  }
  return {best.distance, best.witness, false, HausdorffMode::Exact};
}

// max over a in A of dist(a, B) is a convex maximization, attained at a
// vertex of A; every vertex is a subset sum of the generators. The optimal
// dual y of each distance problem satisfies
//   reach(A, y) - reach(B, y) >= <y, a> - reach(B, y) = dist(a, B),
// so the support gap at y is recorded.
void directed_by_vertices(const Zonotope& a, const Zonotope& b, Best& best) {
  const VectorMeasure gens = VectorMeasure::validate(a.generators());
  const SkeletonPointSet points = skeleton_points(gens);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const BoxL1Solution sol = solve_box_l1(b, points.point(i));
    best.offer(std::abs(reach(a, sol.dual) - reach(b, sol.dual)), sol.dual);
  }
}

HausdorffResult sampled_lower_bound(const Zonotope& z1, const Zonotope& z2) {
  const std::size_t n = z1.dimension();
  Best best;
  for_each_sign_vector(n, [&](std::span<const double> u) {
    best.offer(std::abs(reach(z1, u) - reach(z2, u)), u);
  });
  const Rows dirs = sphere_directions(n, kSampledDirections, 0);
  Vector u(n);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double scale = norm_inf(dirs[i]);
    for (std::size_t k = 0; k < n; ++k) u[k] = dirs[i][k] / scale;
    best.offer(std::abs(reach(z1, u) - reach(z2, u)), u);
  }
  return {best.distance, best.witness, false, HausdorffMode::Sampled};
}

}  // namespace

HausdorffResult hausdorff_convex(const Zonotope& z1, const Zonotope& z2) {
  if (z1.dimension() != z2.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "zonotope dimensions differ");
  }
  const std::size_t n = z1.dimension();
  if (n > kMaxSignDimension) {
    throw Error(ErrorKind::DimensionTooLarge, "Hausdorff distance limited to n <= 20");
  }
  if (n == 1) return line(z1, z2);
  if (n == 2) return planar(z1, z2);
  if (z1.size() > kMaxExactHausdorffAtoms || z2.size() > kMaxExactHausdorffAtoms) {
    return sampled_lower_bound(z1, z2);
  }
  Best best;
  directed_by_vertices(z1, z2, best);
  directed_by_vertices(z2, z1, best);
  if (best.distance <= 0.0) {
    best.distance = 0.0;
    best.witness.assign(n, 1.0);
  }
  return {best.distance, best.witness, false, HausdorffMode::Exact};
}

namespace {

// Largest distance from a point of `from` to its nearest point of `to`.
// `to` is scanned outward from the query's position along the coordinate of
// widest spread; the scan stops once the gap in that coordinate alone
// exceeds the running minimum, or once that minimum can no longer raise the
// maximum.
void directed_points(const Rows& from, const Rows& to, Best& best) {
  const std::size_t n = to.dim();
  std::size_t axis = 0;
  double widest = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t j = 0; j < to.size(); ++j) {
      lo = std::min(lo, to[j][k]);
      hi = std::max(hi, to[j][k]);
    }
    if (hi - lo > widest) {
      widest = hi - lo;
      axis = k;
    }
  }
  std::vector<std::size_t> order(to.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return to[i][axis] < to[j][axis]; });
  std::vector<double> keys(to.size());
  for (std::size_t j = 0; j < to.size(); ++j) keys[j] = to[order[j]][axis];

  for (std::size_t i = 0; i < from.size(); ++i) {
    auto x = from[i];
    const double key = x[axis];
    const auto pos = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
    double nearest = std::numeric_limits<double>::infinity();
    std::size_t up = pos;
    std::size_t down = pos;
    while (up < to.size() || down > 0) {
      bool progressed = false;
      if (up < to.size() && keys[up] - key < nearest) {
        nearest = std::min(nearest, distance1(x, to[order[up]]));
        ++up;
        progressed = true;
      } else {
        up = to.size();
      }
      if (down > 0 && key - keys[down - 1] < nearest) {
        nearest = std::min(nearest, distance1(x, to[order[down - 1]]));
        --down;
        progressed = true;
      } else {
        down = 0;
      }
      if (nearest <= best.distance || !progressed) break;
    }
    if (nearest > best.distance) best.offer(nearest, x);
  }
}

}  // namespace

HausdorffResult hausdorff_points(const SkeletonPointSet& a, const SkeletonPointSet& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorKind::DimensionMismatch, "point set dimensions differ");
  if (a.size() > kMaxPointSetSize || b.size() > kMaxPointSetSize) {
    throw Error(ErrorKind::SizeGuard, "point sets limited to 2^20 points");
  }
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorKind::InvalidArgument, "Hausdorff distance of an empty point set");
  }
  Best best;
  best.distance = 0.0;
  best.witness.assign(a.point(0).begin(), a.point(0).end());
  directed_points(a.points(), b.points(), best);
  directed_points(b.points(), a.points(), best);
  return {best.distance, best.witness, true, HausdorffMode::Exact};
}

}  // namespace lorenz
