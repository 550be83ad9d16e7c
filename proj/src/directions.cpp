#include "lorenz/directions.hpp"

#include "lorenz/error.hpp"
#include "lorenz/random.hpp"

namespace lorenz {

void sign_vector(std::size_t n, std::uint64_t index, std::span<double> out) noexcept {
  for (std::size_t k = 0; k < n; ++k) out[k] = ((index >> k) & 1u) != 0 ? -1.0 : 1.0;
}

void for_each_sign_vector(std::size_t n, const std::function<void(std::span<const double>)>& f) {
  if (n > kMaxSignDimension) {
    throw Error(ErrorKind::DimensionTooLarge,
                "sign-vector scan limited to n <= " + std::to_string(kMaxSignDimension));
  }
  Vector u(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < count; ++i) {
    sign_vector(n, i, u);
    f(u);
  }
}

Rows sphere_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  Rows out(n);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.sphere(n));
  return out;
}

}  // namespace lorenz
