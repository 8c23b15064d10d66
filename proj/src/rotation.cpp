#include "rotkit/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rotkit/errors.hpp"
#include "rotkit/kernels.hpp"

namespace rotkit {

Matrix3 multiply(const Matrix3& a, const Matrix3& b) noexcept {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return out;
}

Matrix3 transpose(const Matrix3& a) noexcept {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(j, i);
  return out;
}

double determinant(const Matrix3& a) noexcept {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double trace(const Matrix3& a) noexcept { return a(0, 0) + a(1, 1) + a(2, 2); }

double max_abs_diff(const Matrix3& a, const Matrix3& b) noexcept {
  double worst = 0.0;
  for (std::size_t k = 0; k < 9; ++k) worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
  return worst;
}

double frobenius_diff(const Matrix3& a, const Matrix3& b) noexcept {
  double sum = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    const double d = a.m[k] - b.m[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double orthogonality_residual(const Matrix3& r) noexcept {
  const Matrix3 rt = transpose(r);
  const Matrix3 id = Matrix3::identity();
  return std::max(max_abs_diff(multiply(r, rt), id), max_abs_diff(multiply(rt, r), id));
}

bool is_rotation(const Matrix3& r, double tol) noexcept {
  for (double v : r.m)
    if (!std::isfinite(v)) return false;
  // NaN-safe: comparisons are written so that NaN residuals fail.
  if (!(orthogonality_residual(r) <= tol)) return false;
  return std::abs(determinant(r) - 1.0) <= tol;
}

void require_rotation(const Matrix3& r, const char* what, double tol) {
  if (!is_rotation(r, tol)) {
    throw InvalidArgument(std::string(what) + " is not a rotation matrix (tol " +
                          std::to_string(tol) + ")");
  }
}

namespace {

void require_finite(double angle, const char* what) {
  if (!std::isfinite(angle)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

RotationMatrix elem_rot_x_left(double pitch) {
  require_finite(pitch, "pitch");
  const double c = std::cos(pitch);
  const double s = std::sin(pitch);
  return {{1, 0, 0, 0, c, s, 0, -s, c}};
}

RotationMatrix elem_rot_y_left(double yaw) {
  require_finite(yaw, "yaw");
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return {{c, 0, -s, 0, 1, 0, s, 0, c}};
}

RotationMatrix elem_rot_z_left(double roll) {
  require_finite(roll, "roll");
  const double c = std::cos(roll);
  const double s = std::sin(roll);
  return {{c, s, 0, -s, c, 0, 0, 0, 1}};
}

RotationMatrix compose_pyr(const EulerPyr& e) {
  return multiply(multiply(elem_rot_x_left(e.pitch), elem_rot_y_left(e.yaw)),
                  elem_rot_z_left(e.roll));
}

RotationMatrix compose_rpy(const EulerRpy& e) {
  return multiply(elem_rot_z_left(e.roll),
                  multiply(elem_rot_x_left(e.pitch), elem_rot_y_left(e.yaw)));
}

double geodesic_from_trace(double trace_a_bt) noexcept {
  const double c = std::clamp((trace_a_bt - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

double geodesic_from_terms(double two_cos, double two_sin) noexcept {
  return std::atan2(two_sin, two_cos);
}

double geodesic_distance(const RotationMatrix& a, const RotationMatrix& b) {
  require_rotation(a, "geodesic_distance: first argument");
  require_rotation(b, "geodesic_distance: second argument");
  double c = 0.0;
  double s = 0.0;
  kernels::scalar::angle_terms(std::span(&a, 1), std::span(&b, 1), std::span(&c, 1), std::span(&s, 1));
  return geodesic_from_terms(c, s);
}

}  // namespace rotkit
