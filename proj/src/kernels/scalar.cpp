// Reference kernels. The SIMD variants reproduce these operation orders
// exactly; change them together.

#include <cmath>
#include <cstddef>

#include "rotkit/kernels.hpp"

namespace rotkit::kernels::scalar {

void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) noexcept {
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Matrix3& p = a[k];
    const Matrix3& q = b[k];
    double m[9];
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m[3 * i + j] = p(i, 0) * q(j, 0) + p(i, 1) * q(j, 1) + p(i, 2) * q(j, 2);
    c[k] = m[0] + m[4] + m[8] - 1.0;
    const double w0 = m[7] - m[5];
    const double w1 = m[2] - m[6];
    const double w2 = m[3] - m[1];
    s[k] = std::sqrt(w0 * w0 + w1 * w1 + w2 * w2);
  }
}

void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) noexcept {
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Matrix3 r = in[k];
    Matrix3 o;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        o(i, j) = m(i, 0) * r(0, j) + m(i, 1) * r(1, j) + m(i, 2) * r(2, j);
    out[k] = o;
  }
}

void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) noexcept {
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Matrix3 r = in[k];
    Matrix3 o;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        o(i, j) = r(i, 0) * m(0, j) + r(i, 1) * m(1, j) + r(i, 2) * m(2, j);
    out[k] = o;
  }
}

void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept {
  for (const Vec9& x : v) {
    Vec9 d;
    for (std::size_t i = 0; i < 9; ++i) d[i] = x[i] - mean[i];
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) out[9 * i + j] = out[9 * i + j] + d[i] * d[j];
  }
}

}  // namespace rotkit::kernels::scalar
