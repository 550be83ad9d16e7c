#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lorenz/error.hpp"
#include "lorenz/measure.hpp"

using namespace lorenz;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validation rejects malformed measures") {
  CHECK(kind_of([] { VectorMeasure::validate(2, {{1, 2}, {3}}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { VectorMeasure::validate(2, {{1, NAN}}); }) == ErrorKind::NonFiniteValue);
  CHECK(kind_of([] { VectorMeasure::validate(1, {{1}, {2}}, Labels{"x", "x"}); }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([] { VectorMeasure::validate(1, {{1}}, Labels{"x", "y"}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { rn_direction(VectorMeasure::validate(2, {{0, 0}}), 0); }) == ErrorKind::ZeroAtom);
}

TEST_CASE("coordinates are kept bit for bit") {
  const double tiny = 4.9406564584124654e-324;
  const auto m = VectorMeasure::validate(2, {{0.1, tiny}, {-0.0, 1e308}});
  CHECK(m.atom(0)[0] == 0.1);
  CHECK(m.atom(0)[1] == tiny);
  CHECK(std::signbit(m.atom(1)[0]));
}

TEST_CASE("canonicalize drops exact zeros with their labels") {
  const auto m = VectorMeasure::validate(2, {{1, 0}, {0, 0}, {0, 2}}, Labels{"a", "b", "c"});
  const auto c = m.canonicalize();
  REQUIRE(c.size() == 2);
  CHECK(*c.labels() == Labels{"a", "c"});
  CHECK(c.total() == Vector{1, 2});
}

TEST_CASE("direct sum concatenates atoms and prefixes labels") {
  const auto a = VectorMeasure::validate(2, {{1, 0}}, Labels{"x"});
  const auto b = VectorMeasure::validate(2, {{0, 1}, {2, 2}});
  const auto s = direct_sum(a, b);
  REQUIRE(s.size() == 3);
  CHECK(*s.labels() == Labels{"a:x", "b:0", "b:1"});
  CHECK(total_variation_mass(s) == doctest::Approx(total_variation_mass(a) + total_variation_mass(b)));
}

TEST_CASE("coordinate product of singletons") {
  const auto a = VectorMeasure::validate(3, {{1, -2, 3}}, Labels{"p"});
  const auto b = VectorMeasure::validate(3, {{4, 5, -6}}, Labels{"q"});
  const auto p = coordinate_product(a, b);
  REQUIRE(p.size() == 1);
  CHECK(Vector(p.atom(0).begin(), p.atom(0).end()) == Vector{4, -10, -18});
  CHECK(*p.labels() == Labels{"(p,q)"});
  CHECK_THROWS_AS(coordinate_product(a, VectorMeasure::zero(2)), Error);
}

TEST_CASE("product with the identity atom returns the atoms") {
  Rng rng(11);
  const auto m = testing::random_measure(rng, 3, 5);
  const auto e = VectorMeasure::validate(3, {{1, 1, 1}});
  CHECK(coordinate_product(e, m).atoms() == m.atoms());
}

TEST_CASE("mass, direction and symmetry properties") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(3, "measure", s));
    const std::size_t n = 1 + s % 5;
    const auto a = testing::random_measure(rng, n, rng.integer(0, 7));
    const auto b = testing::random_measure(rng, n, rng.integer(0, 7));
    const double ma = total_variation_mass(a), mb = total_variation_mass(b);
    CHECK(total_variation_mass(direct_sum(a, b)) == doctest::Approx(ma + mb).epsilon(1e-12));
    CHECK(total_variation_mass(coordinate_product(a, b)) <= ma * mb * (1 + 1e-9));
    for (std::size_t i = 0; i < a.size(); ++i) {
      double l1 = 0;
      for (double x : rn_direction(a, i)) l1 += std::abs(x);
      CHECK(std::abs(l1 - 1.0) <= 1e-12);
    }
    CHECK(testing::sorted(testing::points_of(coordinate_product(a, b).atoms())) ==
          testing::sorted(testing::points_of(coordinate_product(b, a).atoms())));
  }
}

TEST_CASE("complex products match std::complex") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(5, "complex", s));
    const std::size_t n = 1 + s % 3;
    auto make = [&](std::size_t m) {
      Rows r(2 * n);
      for (std::size_t i = 0; i < m; ++i) {
        Vector v(2 * n);
        for (auto& x : v) x = rng.uniform(-2, 2);
        r.push_back(v);
      }
      return ComplexVectorMeasure::validate(n, r);
    };
    const auto a = make(rng.integer(0, 6));
    const auto b = make(rng.integer(0, 6));
    const auto embedded = complex_embed(complex_coordinate_product(a, b));
    oracle::Points expect;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        expect.push_back(oracle::complex_product(Vector(a.atom(i).begin(), a.atom(i).end()),
                                                 Vector(b.atom(j).begin(), b.atom(j).end())));
      }
    }
    CHECK(testing::sorted(testing::points_of(embedded.atoms())) == testing::sorted(expect));
  }
}

TEST_CASE("isomorphic product on one coordinate") {
  // (1 + 2i)(3 - i) = 5 + 5i
  CHECK(isomorphic_product(Vector{1, 2}, Vector{3, -1}) == Vector{5, 5});
  CHECK_THROWS_AS(ComplexVectorMeasure::validate(2, Rows(3)), Error);
}

TEST_CASE("uniform slicing keeps the mass") {
  const auto d = PiecewiseDensityMeasure::validate({0.5, 2.0}, Rows(2, {1, -1, 0, 3}));
  const auto m = slice_uniform(d, 4);
  CHECK(m.size() == 8);
  CHECK(total_variation_mass(m) == doctest::Approx(0.5 * 2 + 2.0 * 3));
  CHECK(d.total_length() == 2.5);
  CHECK_THROWS_AS(PiecewiseDensityMeasure::validate({0.0}, Rows(1, {1})), Error);
  CHECK(direct_sum(d, d).size() == 4);
}
