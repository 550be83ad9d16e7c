#include <doctest.h>

#include "helpers.hpp"
#include "lorenz/directions.hpp"
#include "lorenz/error.hpp"
#include "lorenz/zonoid.hpp"
#include "lorenz/zonotope.hpp"

using namespace lorenz;

TEST_CASE("unit square midpoint") {
  const auto m = VectorMeasure::validate(2, {{1, 0}, {0, 1}});
  const double target[] = {0.5, 0.5};
  const auto cert = achieve(m, target, 1e-9);
  CHECK(cert.lambda == Vector{0.5, 0.5});
  CHECK(cert.intervals == std::vector<Interval>{{0, 0.5}, {1, 1.5}});
  CHECK(cert.residual == 0.0);
}

TEST_CASE("whole set and empty set") {
  const auto m = VectorMeasure::validate(2, {{1, 2}, {0, 0}, {3, -1}});
  const auto all = achieve(m, m.total(), 1e-9);
  CHECK(all.intervals == std::vector<Interval>{{0, 2}});
  const auto none = achieve(m, Vector{0, 0}, 1e-9);
  CHECK(none.intervals.empty());
}

TEST_CASE("points outside the hull are refused with a witness") {
  const auto m = VectorMeasure::validate(2, {{1, 0}, {0, 1}});
  try {
    achieve(m, Vector{2, 2}, 1e-9);
    FAIL("expected NotInHull");
  } catch (const NotInHullError& e) {
    CHECK(e.kind() == ErrorKind::NotInHull);
    const Zonotope z = hull_of(m);
    CHECK(dot(e.witness(), Vector{2, 2}) - reach(z, e.witness()) > 1e-9);
  }
}

TEST_CASE("density form has the same support function") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(1, "density", s));
    const std::size_t n = 1 + s % 4;
    const auto m = testing::random_measure(rng, n, 1 + rng.integer(0, 9));
    const auto sums = oracle::subset_sums(testing::points_of(m.atoms()), n);
    const auto density = to_density(m);
    const Rows dirs = sphere_directions(n, 5, s);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const double want = oracle::max_dot(sums, oracle::Vec(dirs[k].begin(), dirs[k].end()));
      CHECK(density_reach(density, dirs[k]) == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("seeded interior points are realized") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(2, "achieve", s));
    const std::size_t n = 1 + s % 4;
    const auto m = testing::random_measure(rng, n, 1 + rng.integer(0, 9));
    Vector target(n, 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double lam = rng.uniform();
      for (std::size_t k = 0; k < n; ++k) target[k] += lam * m.atom(i)[k];
    }
    const auto cert = achieve(m, target, 1e-9);
    CHECK(cert.residual <= 1e-8);
    Vector sum(n, 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t k = 0; k < n; ++k) sum[k] += cert.lambda[i] * m.atom(i)[k];
    }
    CHECK(oracle::dist1(sum, target) <= 1e-8);
  }
}

TEST_CASE("scaled totals give nested intervals") {
  const auto m = VectorMeasure::validate(3, {{1, 2, 0}, {0.5, -1, 2}, {3, 0, 1}});
  std::vector<Interval> previous;
  for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    Vector t = m.total();
    for (auto& x : t) x *= lam;
    const auto cert = achieve(m, t, 1e-9);
    double length = 0;
    for (const auto& iv : cert.intervals) length += iv.hi - iv.lo;
    CHECK(length == doctest::Approx(3 * lam));
    for (const auto& iv : previous) {
      bool covered = false;
      for (const auto& w : cert.intervals) covered = covered || (w.lo <= iv.lo && iv.hi <= w.hi);
      CHECK(covered);
    }
    previous = cert.intervals;
  }
}

TEST_CASE("mixed atomic and non-atomic parts") {
  const auto m = VectorMeasure::validate(2, {{1, 0}});
  const auto tail = PiecewiseDensityMeasure::validate({2.0}, Rows(2, {0, 1}));
  const auto d = to_density(m, tail);
  CHECK(d.size() == 2);
  const std::vector<Interval> set{{0.5, 2.0}};
  CHECK(density_integral(d, set) == Vector{0.5, 1.0});
  CHECK(density_reach(d, Vector{1, 1}) == 3.0);
}
