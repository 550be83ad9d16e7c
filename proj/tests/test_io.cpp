#include <doctest.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>

#include "helpers.hpp"
#include "lorenz/error.hpp"
#include "lorenz/measure_io.hpp"

using namespace lorenz;

TEST_CASE("round trip is bit exact") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(1, "io", s));
    const std::size_t n = 1 + s % 5;
    std::vector<std::vector<double>> atoms;
    const std::size_t m = rng.integer(0, 6);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> a(n);
      for (auto& x : a) x = rng.normal() * std::pow(10.0, rng.integer(-300, 300));
      atoms.push_back(a);
    }
    std::optional<Labels> labels;
    if (s % 2) {
      labels.emplace();
      for (std::size_t i = 0; i < m; ++i) labels->push_back("atom \"" + std::to_string(i) + "\"");
    }
    const auto meas = VectorMeasure::validate(n, atoms, labels);
    const auto back = std::get<VectorMeasure>(parse_measure(serialize(meas)));
    CHECK(back == meas);
  }
  const double odd[] = {0.1, -0.0, 5e-324, std::numeric_limits<double>::max(), 1.0 / 3.0};
  for (double x : odd) {
    const auto m = VectorMeasure::validate(1, {{x}});
    const auto back = std::get<VectorMeasure>(parse_measure(serialize(m)));
    CHECK(std::bit_cast<std::uint64_t>(back.atom(0)[0]) == std::bit_cast<std::uint64_t>(x));
    const std::string text = format_double(x);
    double parsed = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), parsed);
    CHECK(std::bit_cast<std::uint64_t>(parsed) == std::bit_cast<std::uint64_t>(x));
  }
}

TEST_CASE("complex files") {
  const auto c = std::get<ComplexVectorMeasure>(parse_measure(R"({"dim":1,"complex":true,"atoms":[[1,2],[0,-1]]})"));
  CHECK(c.size() == 2);
  CHECK(std::get<ComplexVectorMeasure>(parse_measure(serialize(c))) == c);
  const auto real = parse_real_measure(serialize(c));
  CHECK(real.dimension() == 2);
}

TEST_CASE("schema errors") {
  auto kind = [](const char* text) {
    try {
      parse_measure(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("{\"dim\": 2, \"atoms\": [[1, 0]") == ErrorKind::ParseError);
  CHECK(kind("[]") == ErrorKind::ParseError);
  CHECK(kind("{\"atoms\": []}") == ErrorKind::ParseError);
  CHECK(kind("{\"dim\": 0, \"atoms\": []}") == ErrorKind::ParseError);
  CHECK(kind("{\"dim\": 2, \"atoms\": [[1, \"x\"]]}") == ErrorKind::ParseError);
  CHECK(kind("{\"dim\": 2, \"atoms\": [[1, 2, 3]]}") == ErrorKind::DimensionMismatch);
  CHECK(kind("{\"dim\": 1, \"atoms\": [[1], [2]], \"labels\": [\"a\", \"a\"]}") == ErrorKind::DuplicateLabel);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "lorenz_io_test.json";
  write_text_file(path, "{\"dim\": 1, \"atoms\": [[2]]}");
  CHECK(parse_real_measure(read_text_file(path)).atom(0)[0] == 2.0);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file("/nonexistent/measure.json"), Error);
}
