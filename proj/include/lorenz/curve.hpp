#pragma once

#include <string>
#include <vector>

#include "lorenz/measure.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz {

/// Lower boundary of a normalized planar Lorenz hull, from (0,0) to (1,1).
struct LorenzCurve {
  std::vector<Point2> points;
};

/// Atoms are (population share, value share) pairs with nonnegative entries.
/// Each coordinate is scaled to total 1, atoms are ordered by ascending
/// slope (zero first coordinate counts as +inf, ties keep input order), and
/// the curve is the running sum. Throws NegativeAtom / ZeroTotal /
/// DimensionMismatch.
LorenzCurve lorenz_curve(const VectorMeasure& m);

/// Hull of the measure after scaling both coordinates to unit total.
Zonotope normalized_hull(const VectorMeasure& m);

/// Gini coefficient as the area of the normalized hull.
double gini(const VectorMeasure& m);

std::string curve_csv(const LorenzCurve& curve);
/// Static figure in the unit box: frame, equality diagonal, curve.
std::string curve_svg(const LorenzCurve& curve);

}  // namespace lorenz
