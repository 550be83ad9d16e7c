#pragma once

#include <span>
#include <vector>

#include "lorenz/measure.hpp"

namespace lorenz {

/// Non-atomic measure with the same hull: atom i becomes a unit-length piece
/// on (i-1, i] whose density is the atom vector. Zero atoms are skipped.
PiecewiseDensityMeasure to_density(const VectorMeasure& m);

/// As above, followed by an existing non-atomic part on the next intervals.
PiecewiseDensityMeasure to_density(const VectorMeasure& m, const PiecewiseDensityMeasure& nonatomic);

/// Integral of max(0, <d, f(s)>) over the whole interval.
double density_reach(const PiecewiseDensityMeasure& density, std::span<const double> d);

/// Half-open interval (lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// Integral of the density over a union of disjoint intervals.
Vector density_integral(const PiecewiseDensityMeasure& density, std::span<const Interval> set);

struct AchievementCertificate {
  Vector lambda;                   // one entry per density piece (nonzero atom)
  std::vector<Interval> intervals; // union of (i-1, i-1+lambda_i], adjacent pieces merged
  double residual = 0.0;           // ||integral over intervals - target||_1
};

/// Realizes a hull point as the value of the density on a union of intervals.
/// Throws NotInHullError with a separating direction when the target is
/// farther than tol (1-norm) from the hull.
AchievementCertificate achieve(const VectorMeasure& m, std::span<const double> target, double tol);

}  // namespace lorenz
