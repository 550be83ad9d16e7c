#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lorenz/directions.hpp"
#include "lorenz/hausdorff.hpp"
#include "lorenz/zonotope.hpp"

using namespace lorenz;

namespace {

std::vector<oracle::P2> polygon(const VectorMeasure& m) {
  auto poly = oracle::planar_hull_of_sums(testing::points_of(m.atoms()));
  return poly;
}

}  // namespace

TEST_CASE("segments at an angle: sign vectors alone are not enough") {
  const Zonotope a(Rows(2, {1, -2}));
  const Zonotope b(Rows(2, {2, -1}));
  const auto r = hausdorff_convex(a, b);
  CHECK(r.distance == doctest::Approx(1.5));
  CHECK(r.mode == HausdorffMode::Exact);
  CHECK(std::abs(reach(a, r.witness) - reach(b, r.witness)) == doctest::Approx(1.5));
  CHECK(oracle::hausdorff_polygons({{0, 0}, {1, -2}}, {{0, 0}, {2, -1}}) == doctest::Approx(1.5));
}

TEST_CASE("planar distance matches the polygon oracle") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(derive_seed(1, "hausdorff2", s));
    const auto a = testing::random_measure(rng, 2, 1 + rng.integer(0, 6));
    const auto b = testing::random_measure(rng, 2, 1 + rng.integer(0, 6));
    const double want = oracle::hausdorff_polygons(polygon(a), polygon(b));
    const auto got = hausdorff_convex(hull_of(a), hull_of(b));
    CHECK(got.distance == doctest::Approx(want).epsilon(1e-9));
    CHECK(norm_inf(got.witness) <= 1.0 + 1e-12);
  }
}

TEST_CASE("distance in higher dimensions is certified and not exceeded by sampling") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(derive_seed(2, "hausdorff3", s));
    const std::size_t n = 3 + s % 2;
    const Zonotope a = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5)));
    const Zonotope b = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5)));
    const auto r = hausdorff_convex(a, b);
    REQUIRE(r.mode == HausdorffMode::Exact);
    CHECK(norm_inf(r.witness) <= 1.0 + 1e-12);
    CHECK(std::abs(reach(a, r.witness) - reach(b, r.witness)) == doctest::Approx(r.distance).epsilon(1e-9));
    const Rows dirs = sphere_directions(n, 3000, s);
    Vector u(n);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const double scale = norm_inf(dirs[k]);
      for (std::size_t c = 0; c < n; ++c) u[c] = dirs[k][c] / scale;
      CHECK(std::abs(reach(a, u) - reach(b, u)) <= r.distance + 1e-9);
    }
  }
}

TEST_CASE("identity and triangle inequality") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(derive_seed(3, "triangle", s));
    const std::size_t n = 2 + s % 3;
    const Zonotope a = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5)));
    const Zonotope b = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5)));
    const Zonotope c = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5)));
    CHECK(hausdorff_convex(a, a).distance == 0.0);
    CHECK(hausdorff_convex(a, c).distance <=
          hausdorff_convex(a, b).distance + hausdorff_convex(b, c).distance + 1e-9);
    CHECK(hausdorff_convex(a, b).distance == doctest::Approx(hausdorff_convex(b, a).distance).epsilon(1e-12));
  }
}

TEST_CASE("large generator counts fall back to a sampled lower bound") {
  Rng rng(4);
  const Zonotope a = hull_of(testing::random_measure(rng, 3, 20));
  const Zonotope b = hull_of(testing::random_measure(rng, 3, 3));
  const auto r = hausdorff_convex(a, b);
  CHECK(r.mode == HausdorffMode::Sampled);
  CHECK(std::abs(reach(a, r.witness) - reach(b, r.witness)) == doctest::Approx(r.distance));
}

TEST_CASE("finite point sets match the quadratic scan") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(derive_seed(5, "points", s));
    const std::size_t n = 1 + s % 4;
    const auto a = testing::random_measure(rng, n, 1 + rng.integer(0, 7));
    const auto b = testing::random_measure(rng, n, 1 + rng.integer(0, 7));
    const auto pa = oracle::subset_sums(testing::points_of(a.atoms()), n);
    const auto pb = oracle::subset_sums(testing::points_of(b.atoms()), n);
    const auto r = hausdorff_points(skeleton_points(a), skeleton_points(b));
    CHECK(r.distance == doctest::Approx(oracle::hausdorff_finite(pa, pb)).epsilon(1e-12));
    CHECK(r.witness_is_point);
  }
}
