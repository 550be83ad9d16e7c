#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lorenz/containment.hpp"
#include "lorenz/measure.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz {

/// Lorenz product of two hulls: generators are all coordinate-wise products
/// g * h, ordered by (index of g, index of h), with zero products dropped.
Zonotope lorenz_product(const Zonotope& h1, const Zonotope& h2);

/// Minkowski sum: generator concatenation.
Zonotope minkowski_sum(const Zonotope& h1, const Zonotope& h2);

/// Multiplicative identity, the segment from 0 to (1, ..., 1).
Zonotope identity_hull(std::size_t n);

struct HullComparison {
  bool equal = true;
  Vector witness;      // a direction where the support functions disagree
  double max_gap = 0;  // largest |reach(h1, d) - reach(h2, d)| seen
};

/// Set equality by two-sided support comparison, in the same modes as
/// includes().
HullComparison compare_hulls(const Zonotope& h1, const Zonotope& h2, const CompareMode& mode,
                             const Tolerance& tol = {});

inline bool hull_equal(const Zonotope& h1, const Zonotope& h2, const CompareMode& mode,
                       const Tolerance& tol = {}) {
  return compare_hulls(h1, h2, mode, tol).equal;
}

// Measure edits that leave the Lorenz hull unchanged.
struct SplitAtom {
  std::size_t index = 0;
  double fraction = 0.5;  // in (0, 1); atom a becomes f*a and a - f*a
};
struct MergeColinear {
  std::size_t first = 0;   // the merged atom takes this slot
  std::size_t second = 0;  // removed
};
struct Permute {
  std::vector<std::size_t> order;  // new atom k is old atom order[k]
};
struct InsertZeroAtom {
  std::size_t position = 0;
};
using TransformStep = std::variant<SplitAtom, MergeColinear, Permute, InsertZeroAtom>;
using HullTransformSpec = std::vector<TransformStep>;

/// Applies the steps in order. Labels are dropped. Throws InvalidTransform on
/// out-of-range indices, a bad fraction, a non-permutation, or a merge of
/// atoms that are not positively proportional.
VectorMeasure apply_transform(const VectorMeasure& m, const HullTransformSpec& t);

/// Subset sums of the coordinate-wise product measure.
SkeletonPointSet skeleton_product(const VectorMeasure& m1, const VectorMeasure& m2);

}  // namespace lorenz
