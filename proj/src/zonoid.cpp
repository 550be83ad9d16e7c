#include "lorenz/zonoid.hpp"

#include <algorithm>

#include "lorenz/containment.hpp"
#include "lorenz/error.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz {

PiecewiseDensityMeasure to_density(const VectorMeasure& m) {
  std::vector<double> lengths;
  Rows directions(m.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (is_zero(m.atom(i))) continue;
    lengths.push_back(1.0);
    directions.push_back(m.atom(i));
  }
  return PiecewiseDensityMeasure::validate(std::move(lengths), std::move(directions));
}

PiecewiseDensityMeasure to_density(const VectorMeasure& m, const PiecewiseDensityMeasure& nonatomic) {
  return direct_sum(to_density(m), nonatomic);
}

double density_reach(const PiecewiseDensityMeasure& density, std::span<const double> d) {
  if (d.size() != density.dimension()) throw Error(ErrorKind::DimensionMismatch, "direction dimension differs");
  double total = 0.0;
  for (std::size_t k = 0; k < density.size(); ++k) {
    total += density.length(k) * std::max(0.0, dot(d, density.direction(k)));
  }
  return total;
}

Vector density_integral(const PiecewiseDensityMeasure& density, std::span<const Interval> set) {
  const std::size_t n = density.dimension();
  Vector out(n, 0.0);
  for (const auto& iv : set) {
    if (!(iv.lo <= iv.hi)) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
    double start = 0.0;
    for (std::size_t k = 0; k < density.size(); ++k) {
      const double end = start + density.length(k);
      const double overlap = std::min(end, iv.hi) - std::max(start, iv.lo);
      if (overlap > 0.0) {
        auto f = density.direction(k);
        for (std::size_t c = 0; c < n; ++c) out[c] += overlap * f[c];
      }
      start = end;
    }
  }
  return out;
}

AchievementCertificate achieve(const VectorMeasure& m, std::span<const double> target, double tol) {
  if (target.size() != m.dimension()) throw Error(ErrorKind::DimensionMismatch, "target dimension differs");
  const Zonotope z = hull_of(m);
  auto membership = contains_point(z, target, tol);
  if (auto* out = std::get_if<Outside>(&membership)) throw NotInHullError(out->witness, out->violation);

  AchievementCertificate cert;
  cert.lambda = std::get<Inside>(membership).lambda;
  for (std::size_t i = 0; i < cert.lambda.size(); ++i) {
    const double lam = std::clamp(cert.lambda[i], 0.0, 1.0);
    if (lam <= 0.0) continue;
    const double lo = static_cast<double>(i);
    const double hi = lo + lam;
    if (!cert.intervals.empty() && cert.intervals.back().hi == lo) {
      cert.intervals.back().hi = hi;
    } else {
      cert.intervals.push_back({lo, hi});
    }
  }
  const Vector got = density_integral(to_density(m), cert.intervals);
  cert.residual = distance1(got, target);
  return cert;
}

}  // namespace lorenz
