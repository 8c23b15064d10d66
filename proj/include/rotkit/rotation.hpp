#pragma once

#include <array>
#include <cstddef>

#include "rotkit/angles.hpp"

namespace rotkit {

/// Default tolerance for SO(3) membership: max-abs residual of R*R^T - I
/// (and R^T*R - I) and of det(R) - 1.
inline constexpr double kOrthoTol = 1e-9;

/// Row-major 3x3 real matrix. Used both for general 3x3 products and as the
/// rotation-matrix pose representation.
struct Matrix3 {
  std::array<double, 9> m{};

  constexpr double& operator()(std::size_t i, std::size_t j) noexcept { return m[3 * i + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const noexcept { return m[3 * i + j]; }

  static constexpr Matrix3 identity() noexcept { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static constexpr Matrix3 diagonal(double a, double b, double c) noexcept {
    return {{a, 0, 0, 0, b, 0, 0, 0, c}};
  }

  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

using RotationMatrix = Matrix3;

Matrix3 multiply(const Matrix3& a, const Matrix3& b) noexcept;
Matrix3 transpose(const Matrix3& a) noexcept;
double determinant(const Matrix3& a) noexcept;
double trace(const Matrix3& a) noexcept;

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix3& a, const Matrix3& b) noexcept;
double frobenius_diff(const Matrix3& a, const Matrix3& b) noexcept;

/// max(|R R^T - I|, |R^T R - I|) in max-abs-entry norm.
double orthogonality_residual(const Matrix3& r) noexcept;

bool is_rotation(const Matrix3& r, double tol = kOrthoTol) noexcept;

/// Throws InvalidArgument naming `what` unless is_rotation(r, tol).
void require_rotation(const Matrix3& r, const char* what, double tol = kOrthoTol);

// Left-handed elemental rotations of the 300W-LP convention.
RotationMatrix elem_rot_x_left(double pitch);
RotationMatrix elem_rot_y_left(double yaw);
RotationMatrix elem_rot_z_left(double roll);

/// R_X(p) * R_Y(y) * R_Z(r): intrinsic pitch, then yaw, then roll.
RotationMatrix compose_pyr(const EulerPyr& e);

/// R_Z(r') * R_X(p') * R_Y(y'): intrinsic roll, then pitch, then yaw.
RotationMatrix compose_rpy(const EulerRpy& e);

/// Rotation angle separating a and b, in [0, pi]. Both inputs must be
/// rotations at kOrthoTol.
///
/// Evaluated as atan2(|skew(m)|, tr(m) - 1) with m = a * b^T, which equals
/// acos((tr(m) - 1) / 2) but stays accurate near 0 and pi: identical inputs
/// give exactly 0, where the acos form returns ~1e-8.
double geodesic_distance(const RotationMatrix& a, const RotationMatrix& b);

/// acos of the clamped (tr(a * b^T) - 1) / 2; drift just past +-1 cannot
/// produce NaN.
double geodesic_from_trace(double trace_a_bt) noexcept;

/// atan2(two_sin, two_cos) on the outputs of kernels::angle_terms.
double geodesic_from_terms(double two_cos, double two_sin) noexcept;

}  // namespace rotkit
