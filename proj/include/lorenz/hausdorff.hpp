#pragma once

#include "lorenz/zonotope.hpp"

namespace lorenz {

enum class HausdorffMode { Exact, Sampled };

struct HausdorffResult {
  double distance = 0.0;
  /// Direction u with ||u||_inf = 1 attaining |reach(a, u) - reach(b, u)|
  /// (convex case), or the point farthest from the other set (finite sets).
  Vector witness;
  bool witness_is_point = false;
  HausdorffMode mode = HausdorffMode::Exact;
};

/// Largest generator count for which the n >= 3 exact path enumerates
/// subset sums; beyond it the result is a sampled lower bound.
inline constexpr std::size_t kMaxExactHausdorffAtoms = 14;

/// Hausdorff distance between two zonotopes under the 1-norm, which equals
/// the largest |reach(z1, u) - reach(z2, u)| over ||u||_inf <= 1.
HausdorffResult hausdorff_convex(const Zonotope& z1, const Zonotope& z2);

inline constexpr std::size_t kMaxPointSetSize = std::size_t{1} << 20;

/// Hausdorff distance between finite point sets under the 1-norm.
HausdorffResult hausdorff_points(const SkeletonPointSet& a, const SkeletonPointSet& b);

}  // namespace lorenz
