#include "lorenz/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

PlanarSupportIndex::PlanarSupportIndex(const Zonotope& z) {
  if (z.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "planar index needs dimension 2");
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto g = z.generator(i);
    if (g[0] == 0.0 && g[1] == 0.0) continue;
    keyed.emplace_back(std::atan2(g[1], g[0]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  const std::size_t m = keyed.size();
  angles_.resize(m);
  prefix_x_.assign(2 * m + 1, 0.0);
  prefix_y_.assign(2 * m + 1, 0.0);
  for (std::size_t j = 0; j < 2 * m; ++j) {
    auto g = z.generator(keyed[j % m].second);
    if (j < m) angles_[j] = keyed[j].first;
    prefix_x_[j + 1] = prefix_x_[j] + g[0];
    prefix_y_[j + 1] = prefix_y_[j] + g[1];
  }
}

double PlanarSupportIndex::reach(double dx, double dy) const noexcept {
  const std::size_t m = angles_.size();
  if (m == 0 || (dx == 0.0 && dy == 0.0)) return 0.0;
  constexpr double pi = std::numbers::pi;
  // Open arc (lo, lo + pi) of generator angles with positive inner product,
  // with lo in [-pi, pi). Positions past the end wrap onto angle + 2 pi.
  double lo = std::atan2(dy, dx) - pi / 2;
  if (lo < -pi) lo += 2 * pi;
  const double hi = lo + pi;
  auto angle_at = [&](std::size_t j) { return j < m ? angles_[j] : angles_[j - m] + 2 * pi; };
  auto first_above = [&](double t, bool strict) {
    std::size_t a = 0;
    std::size_t b = 2 * m;
    while (a < b) {
      const std::size_t mid = (a + b) / 2;
      const bool before = strict ? angle_at(mid) <= t : angle_at(mid) < t;
      if (before) a = mid + 1; else b = mid;
    }
    return a;
  };
  const std::size_t begin = first_above(lo, true);
  const std::size_t end = std::max(begin, first_above(hi, false));
  const double sx = prefix_x_[end] - prefix_x_[begin];
  const double sy = prefix_y_[end] - prefix_y_[begin];
  return std::max(0.0, dx * sx + dy * sy);
}

}  // namespace lorenz
