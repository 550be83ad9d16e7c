#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "lorenz/rows.hpp"

namespace lorenz {

inline constexpr std::size_t kMaxSignDimension = 20;

/// The i-th vector of {-1, +1}^n: bit k of i set means coordinate k is -1.
void sign_vector(std::size_t n, std::uint64_t index, std::span<double> out) noexcept;

/// Calls f on every sign vector in index order. Throws DimensionTooLarge for
/// n > 20.
void for_each_sign_vector(std::size_t n, const std::function<void(std::span<const double>)>& f);

/// `count` directions uniform on the Euclidean sphere, drawn from Rng(seed).
Rows sphere_directions(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace lorenz
