#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "lorenz/containment.hpp"
#include "lorenz/error.hpp"

namespace lorenz {

// Bounded-variable primal simplex for
//   min 1's+ + 1's-   s.t.  G lambda + s+ - s- = p,  0 <= lambda <= 1,  s+-, s- >= 0.
// Columns 0..m-1 are lambda, m..m+n-1 are s+, m+n..m+2n-1 are s-. Bland's
// rule on entering and leaving variables rules out cycling.
BoxL1Solution solve_box_l1(const Zonotope& z, std::span<const double> p) {
  const std::size_t n = z.dimension();
  const std::size_t m = z.size();
  if (p.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                                  " coordinates, zonotope has dimension " +
                                                  std::to_string(n));
  }
  const std::size_t vars = m + 2 * n;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  double scale = 1.0;
  for (double x : z.generators().flat()) scale = std::max(scale, std::abs(x));
  for (double x : p) scale = std::max(scale, std::abs(x));
  const double cost_eps = 1e-12 * scale;
  const double pivot_eps = 1e-11;

  auto upper = [&](std::size_t j) { return j < m ? 1.0 : kInf; };
  auto cost = [&](std::size_t j) { return j < m ? 0.0 : 1.0; };
  auto column = [&](std::size_t j, Eigen::VectorXd& out) {
    out.setZero(static_cast<Eigen::Index>(n));
    if (j < m) {
      auto g = z.generator(j);
      for (std::size_t k = 0; k < n; ++k) out[static_cast<Eigen::Index>(k)] = g[k];
    } else if (j < m + n) {
      out[static_cast<Eigen::Index>(j - m)] = 1.0;
    } else {
      out[static_cast<Eigen::Index>(j - m - n)] = -1.0;
    }
  };

  enum class State { Basic, Lower, Upper };
  std::vector<State> state(vars, State::Lower);
  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    basis[i] = p[i] >= 0.0 ? m + i : m + n + i;
    state[basis[i]] = State::Basic;
  }

  const auto N = static_cast<Eigen::Index>(n);
  Eigen::VectorXd rhs(N), xb(N), y(N), col(N), w(N), cb(N);
  Eigen::MatrixXd B(N, N);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  auto refactor = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      column(basis[i], col);
      B.col(static_cast<Eigen::Index>(i)) = col;
      cb[static_cast<Eigen::Index>(i)] = cost(basis[i]);
    }
    lu.compute(B);
    for (std::size_t k = 0; k < n; ++k) rhs[static_cast<Eigen::Index>(k)] = p[k];
    for (std::size_t j = 0; j < m; ++j) {
      if (state[j] != State::Upper) continue;
      auto g = z.generator(j);
      for (std::size_t k = 0; k < n; ++k) rhs[static_cast<Eigen::Index>(k)] -= g[k];
    }
    xb = lu.solve(rhs);
    y = lu.transpose().solve(cb);
  };

  const std::size_t max_iterations = 200 * (vars + 10);
  std::size_t iteration = 0;
  for (; iteration < max_iterations; ++iteration) {
    refactor();

    std::size_t entering = vars;
    for (std::size_t j = 0; j < vars && entering == vars; ++j) {
      if (state[j] == State::Basic) continue;
      double reduced = cost(j);
      if (j < m) {
        reduced -= dot(std::span<const double>(y.data(), n), z.generator(j));
      } else if (j < m + n) {
        reduced -= y[static_cast<Eigen::Index>(j - m)];
      } else {
        reduced += y[static_cast<Eigen::Index>(j - m - n)];
      }
      if ((state[j] == State::Lower && reduced < -cost_eps) ||
          (state[j] == State::Upper && reduced > cost_eps)) {
        entering = j;
      }
    }
    if (entering == vars) break;

    column(entering, col);
    w = lu.solve(col);
    const double dir = state[entering] == State::Lower ? 1.0 : -1.0;

    double best = kInf;
    std::size_t leave_row = n;
    State leave_to = State::Lower;
    for (std::size_t i = 0; i < n; ++i) {
      const double coef = dir * w[static_cast<Eigen::Index>(i)];
      const double value = xb[static_cast<Eigen::Index>(i)];
      double limit;
      State to;
      if (coef > pivot_eps) {
        limit = std::max(0.0, value / coef);
        to = State::Lower;
      } else if (coef < -pivot_eps && std::isfinite(upper(basis[i]))) {
        limit = std::max(0.0, (upper(basis[i]) - value) / -coef);
        to = State::Upper;
      } else {
        continue;
      }
      const bool take = leave_row == n || limit < best - 1e-15 ||
                        (limit <= best + 1e-15 && basis[i] < basis[leave_row]);
      if (take) {
        best = std::min(best, limit);
        leave_row = i;
        leave_to = to;
      }
    }
    if (upper(entering) <= best) {
      if (!std::isfinite(upper(entering))) {
        throw Error(ErrorKind::NumericalFailure, "unbounded direction in a bounded problem");
      }
      state[entering] = state[entering] == State::Lower ? State::Upper : State::Lower;
      continue;
    }
    state[basis[leave_row]] = leave_to;
    basis[leave_row] = entering;
    state[entering] = State::Basic;
  }
  if (iteration == max_iterations) {
    throw Error(ErrorKind::NumericalFailure, "simplex iteration limit reached");
  }

  BoxL1Solution sol;
  sol.lambda.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (state[j] == State::Upper) sol.lambda[j] = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i] < m) sol.lambda[basis[i]] = std::clamp(xb[static_cast<Eigen::Index>(i)], 0.0, 1.0);
  }
  Vector fit(n, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    auto g = z.generator(j);
    for (std::size_t k = 0; k < n; ++k) fit[k] += sol.lambda[j] * g[k];
  }
  sol.residual = distance1(fit, p);
  sol.dual.resize(n);
  for (std::size_t k = 0; k < n; ++k) sol.dual[k] = std::clamp(y[static_cast<Eigen::Index>(k)], -1.0, 1.0);
  return sol;
}

double distance_to_hull(const Zonotope& z, std::span<const double> p) {
  return solve_box_l1(z, p).residual;
}

}  // namespace lorenz
