#pragma once

#include <algorithm>
#include <cmath>

namespace lorenz {

// Mixed absolute/relative comparison used throughout the library:
// |lhs - rhs| <= atol + rtol * max(|lhs|, |rhs|).
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;

  double slack(double lhs, double rhs) const noexcept {
    return atol + rtol * std::max(std::abs(lhs), std::abs(rhs));
  }
  bool close(double lhs, double rhs) const noexcept {
    return std::abs(lhs - rhs) <= slack(lhs, rhs);
  }
  // lhs is larger than rhs by more than the allowed slack.
  bool exceeds(double lhs, double rhs) const noexcept {
    return lhs - rhs > slack(lhs, rhs);
  }
};

}  // namespace lorenz
