#pragma once

#include <vector>

#include "lorenz/measure.hpp"
#include "lorenz/random.hpp"
#include "oracles.hpp"

namespace testing {

inline lorenz::VectorMeasure random_measure(lorenz::Rng& rng, std::size_t n, std::size_t m, bool integer = false) {
  std::vector<std::vector<double>> atoms;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> a(n);
    bool zero = true;
    while (zero) {
      for (auto& x : a) x = integer ? static_cast<double>(rng.integer(-9, 9)) : rng.uniform(-1.0, 1.0);
      for (double x : a) zero = zero && x == 0.0;
    }
    atoms.push_back(a);
  }
  return lorenz::VectorMeasure::validate(n, atoms);
}

inline oracle::Points points_of(const lorenz::Rows& rows) {
  oracle::Points out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.emplace_back(rows[i].begin(), rows[i].end());
  return out;
}

inline oracle::Points sorted(oracle::Points p) {
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace testing
