#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "rotkit/errors.hpp"

namespace rotkit {

template <std::size_t N>
using SquareMatrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct SymmetricEigen {
  std::array<double, N> values{};             // descending
  std::array<std::array<double, N>, N> vectors{};  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops below `tol` times the Frobenius norm of
/// the input; throws NumericFailure after `max_sweeps` sweeps. Only the
/// symmetric part of `a` is meaningful.
template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(const SquareMatrix<N>& a, double tol = 1e-12, int max_sweeps = 100) {
  SquareMatrix<N> m = a;
  SquareMatrix<N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;

  double scale = 0.0;
  for (const auto& row : m)
    for (double x : row) scale += x * x;
  scale = std::sqrt(scale);

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
  };

  SymmetricEigen<N> out;
  int sweep = 0;
  for (;; ++sweep) {
    if (off_norm() <= tol * scale) break;
    if (sweep >= max_sweeps) throw NumericFailure("jacobi_eigen: no convergence");
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = m[p][q];
        if (apq == 0.0) continue;
        const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double mkp = m[k][p];
          const double mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double mpk = m[p][k];
          const double mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        m[p][q] = 0.0;
        m[q][p] = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return m[i][i] > m[j][j]; });
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = m[order[k]][order[k]];
    for (std::size_t i = 0; i < N; ++i) out.vectors[k][i] = v[i][order[k]];
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace rotkit
