#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lorenz/curve.hpp"
#include "lorenz/error.hpp"
#include "lorenz/hausdorff.hpp"
#include "lorenz/lorenz_ops.hpp"

using namespace lorenz;

namespace {

oracle::Points gens(const Zonotope& z) { return testing::sorted(testing::points_of(z.generators())); }

// Hull from pairwise products computed here, for comparison.
Zonotope product_oracle(const VectorMeasure& a, const VectorMeasure& b) {
  Rows out(a.dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Vector v(a.dimension());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.atom(i)[k] * b.atom(j)[k];
      bool zero = true;
      for (double x : v) zero = zero && x == 0.0;
      if (!zero) out.push_back(v);
    }
  }
  return Zonotope(out);
}

}  // namespace

TEST_CASE("product generators are the pairwise products") {
  const auto a = VectorMeasure::validate(2, {{1, 2}, {3, 0}});
  const auto b = VectorMeasure::validate(2, {{0, 5}, {-1, 1}});
  const Zonotope p = lorenz_product(hull_of(a), hull_of(b));
  CHECK(gens(p) == gens(product_oracle(a, b)));
  CHECK(p.size() == 3);  // (3,0)*(0,5) vanishes
}

TEST_CASE("algebraic laws on integer generators") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(1, "laws", s));
    const std::size_t n = 1 + s % 4;
    const Zonotope h1 = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5), true));
    const Zonotope h2 = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5), true));
    const Zonotope h3 = hull_of(testing::random_measure(rng, n, 1 + rng.integer(0, 5), true));
    CHECK(gens(lorenz_product(h1, h2)) == gens(lorenz_product(h2, h1)));
    CHECK(gens(lorenz_product(lorenz_product(h1, h2), h3)) == gens(lorenz_product(h1, lorenz_product(h2, h3))));
    CHECK(gens(lorenz_product(h1, minkowski_sum(h2, h3))) ==
          gens(minkowski_sum(lorenz_product(h1, h2), lorenz_product(h1, h3))));
    CHECK(lorenz_product(identity_hull(n), h1).generators() == h1.generators());
  }
}

TEST_CASE("hull-preserving transforms") {
  const auto m = VectorMeasure::validate(2, {{1, 2}, {3, -1}}, Labels{"a", "b"});
  const auto t = apply_transform(m, {SplitAtom{0, 0.25}, InsertZeroAtom{0}, Permute{{3, 0, 1, 2}},
                                     MergeColinear{2, 3}});
  CHECK(!t.labels());
  CHECK(t.size() == 3);
  CHECK(hull_equal(hull_of(m), hull_of(t), Exact2d{}));
  CHECK_THROWS_AS(apply_transform(m, {SplitAtom{5, 0.5}}), Error);
  CHECK_THROWS_AS(apply_transform(m, {SplitAtom{0, 1.0}}), Error);
  CHECK_THROWS_AS(apply_transform(m, {Permute{{0, 0}}}), Error);
  CHECK_THROWS_AS(apply_transform(m, {MergeColinear{0, 1}}), Error);
  CHECK_THROWS_AS(apply_transform(m, {InsertZeroAtom{3}}), Error);
}

TEST_CASE("product hull depends only on the factor hulls") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(derive_seed(2, "theorem1", s));
    const std::size_t n = 2 + s % 3;
    const auto m1 = testing::random_measure(rng, n, 1 + rng.integer(0, 4));
    const auto m2 = testing::random_measure(rng, n, 1 + rng.integer(0, 4));
    const auto t1 = apply_transform(m1, {SplitAtom{0, rng.uniform(0.1, 0.9)}, InsertZeroAtom{1}});
    const auto t2 = apply_transform(m2, {SplitAtom{m2.size() - 1, 0.5}, MergeColinear{m2.size(), m2.size() - 1}});
    const Zonotope p = lorenz_product(hull_of(m1), hull_of(m2));
    const Zonotope q = lorenz_product(hull_of(t1), hull_of(t2));
    const CompareMode mode = n == 2 ? CompareMode{Exact2d{}} : CompareMode{Sampled{1000, s}};
    CHECK(hull_equal(p, q, mode));
    CHECK(hausdorff_convex(p, q).distance <= 1e-9);
  }
}

TEST_CASE("products preserve inclusion") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(derive_seed(3, "inclusion", s));
    const auto o1 = testing::random_measure(rng, 2, 1 + rng.integer(0, 4));
    const auto o2 = testing::random_measure(rng, 2, 1 + rng.integer(0, 4));
    Rows i1(2);
    for (std::size_t i = 0; i < o1.size(); ++i) {
      const double lam = rng.uniform();
      i1.push_back(Vector{lam * o1.atom(i)[0], lam * o1.atom(i)[1]});
    }
    const Zonotope inner = lorenz_product(Zonotope(i1), hull_of(o2));
    const Zonotope outer = lorenz_product(hull_of(o1), hull_of(o2));
    CHECK(includes(inner, outer, Exact2d{}).verdict == Verdict::Included);
  }
}

TEST_CASE("two-generator hulls have no inverse") {
  Rng rng(4);
  for (int s = 0; s < 30; ++s) {
    const Zonotope two = hull_of(testing::random_measure(rng, 2, 2));
    const Zonotope any = hull_of(testing::random_measure(rng, 2, 1 + rng.integer(0, 4)));
    CHECK_FALSE(hull_equal(lorenz_product(two, any), identity_hull(2), Exact2d{}));
  }
}

TEST_CASE("skeleton product is the skeleton of the product measure") {
  const auto a = VectorMeasure::validate(2, {{1, 2}, {2, 1}});
  const auto b = VectorMeasure::validate(2, {{1, -1}, {3, 1}});
  const auto pts = skeleton_product(a, b);
  oracle::Points atoms{{1, -2}, {3, 2}, {2, -1}, {6, 1}};
  auto want = testing::sorted(oracle::subset_sums(atoms, 2));
  want.erase(std::unique(want.begin(), want.end()), want.end());
  CHECK(testing::points_of(pts.points()) == want);
}

TEST_CASE("gini of the two-person fixture") {
  const auto m = VectorMeasure::validate(2, {{1, 1}, {1, 3}});
  CHECK(gini(m) == doctest::Approx(0.25).epsilon(1e-12));
  const auto curve = lorenz_curve(m);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[1] == Point2{0.5, 0.25});
  CHECK(curve.points[2] == Point2{1.0, 1.0});
  CHECK(curve_csv(curve).rfind("x,y\n", 0) == 0);
  CHECK(curve_svg(curve).find("viewBox=\"0 0 1 1\"") != std::string::npos);
}

TEST_CASE("gini against the mean-difference formula") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(derive_seed(5, "gini", s));
    std::vector<long long> income(2 + rng.integer(0, 48));
    for (auto& x : income) x = rng.integer(0, 100);
    income[0] += 1;
    std::vector<std::vector<double>> atoms;
    for (auto x : income) atoms.push_back({1.0, static_cast<double>(x)});
    const auto m = VectorMeasure::validate(2, atoms);
    CHECK(std::abs(gini(m) - oracle::classical_gini(income)) <= 1e-9);
    const auto pts = lorenz_curve(m).points;
    for (std::size_t i = 2; i < pts.size(); ++i) {
      const double s0 = (pts[i - 1].y - pts[i - 2].y) / (pts[i - 1].x - pts[i - 2].x);
      const double s1 = (pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x);
      CHECK(s1 >= s0 - 1e-12);
    }
  }
}

TEST_CASE("curve input errors") {
  auto kind = [](const VectorMeasure& m) {
    try {
      lorenz_curve(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind(VectorMeasure::validate(2, {{1, -1}})) == ErrorKind::NegativeAtom);
  CHECK(kind(VectorMeasure::validate(2, {{1, 0}})) == ErrorKind::ZeroTotal);
  CHECK(kind(VectorMeasure::validate(3, {{1, 1, 1}})) == ErrorKind::DimensionMismatch);
}
