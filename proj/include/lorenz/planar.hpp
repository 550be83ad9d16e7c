#pragma once

#include <span>
#include <vector>

#include "lorenz/zonotope.hpp"

namespace lorenz {

// Support queries on a planar zonotope in O(log m). Generators are sorted by
// polar angle; the generators with <d, g> > 0 form one open half-circle of
// angles, so their sum is a difference of two prefix sums.
class PlanarSupportIndex {
 public:
  explicit PlanarSupportIndex(const Zonotope& z);

  std::size_t size() const noexcept { return angles_.size(); }
  double reach(double dx, double dy) const noexcept;

 private:
  std::vector<double> angles_;  // sorted, length m
  std::vector<double> prefix_x_;  // length 2m + 1 over the doubled circle
  std::vector<double> prefix_y_;
};

}  // namespace lorenz
