#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "lorenz/tolerance.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz {

/// Solution of  min ||G lambda - p||_1  subject to  lambda in [0, 1]^m, where
/// the columns of G are the zonotope generators. `residual` is the optimal
/// value, i.e. the 1-norm distance from p to the zonotope, and `dual` is an
/// optimal y in [-1, 1]^n of the dual  max <y, p> - reach(z, y).
struct BoxL1Solution {
  Vector lambda;
  double residual = 0.0;
  Vector dual;
};

BoxL1Solution solve_box_l1(const Zonotope& z, std::span<const double> p);

/// 1-norm distance from p to the zonotope.
double distance_to_hull(const Zonotope& z, std::span<const double> p);

struct Inside {
  Vector lambda;     // in [0, 1]^m, sum lambda_i g_i reproduces p
  double residual;   // ||sum lambda_i g_i - p||_1
};
struct Outside {
  Vector witness;    // <witness, p> > reach(z, witness) + tol
  double violation;  // <witness, p> - reach(z, witness)
};
using PointMembership = std::variant<Inside, Outside>;

PointMembership contains_point(const Zonotope& z, std::span<const double> p, double tol);

struct Exact2d {};
struct Sampled {
  std::size_t dirs = 1000;
  std::uint64_t seed = 0;
};
using CompareMode = std::variant<Exact2d, Sampled>;

enum class Verdict { Included, Excluded, NoViolationFound };

struct InclusionResult {
  Verdict verdict = Verdict::NoViolationFound;
  Vector witness;              // set when Excluded
  double max_violation = 0.0;  // max over tested d of reach(inner, d) - reach(outer, d)
};

/// Support-function inclusion test. Exact2d compares reach on every
/// direction where either support function can bend, which decides
/// inclusion for planar zonotopes. Sampled checks {-1, 1}^n plus seeded
/// sphere directions; it can only refute inclusion.
InclusionResult includes(const Zonotope& inner, const Zonotope& outer, const CompareMode& mode,
                         const Tolerance& tol = {});

/// Unit-infinity-norm directions at which a planar support function of any of
/// the given zonotopes can change slope, plus the four square corners.
Rows planar_breakpoint_directions(std::span<const Zonotope* const> zonotopes);

}  // namespace lorenz
