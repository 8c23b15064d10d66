#include <doctest.h>

#include <cmath>
#include <limits>

#include "rotkit/errors.hpp"
#include "rotkit/rotation.hpp"
#include "support.hpp"

using namespace rotkit;
using testing::max_abs;
using testing::naive_multiply;

namespace {

// Expanded R_X(p) R_Y(y) R_Z(r) written out by hand.
Matrix3 pyr_closed_form(double p, double y, double r) {
  const double cp = std::cos(p), sp = std::sin(p);
  const double cy = std::cos(y), sy = std::sin(y);
  const double cr = std::cos(r), sr = std::sin(r);
  return {{cy * cr, cy * sr, -sy,                                //
           -cp * sr + sp * sy * cr, cp * cr + sp * sy * sr, sp * cy,  //
           sp * sr + cp * sy * cr, -sp * cr + cp * sy * sr, cp * cy}};
}

// Expanded R_Z(r') R_X(p') R_Y(y').
Matrix3 rpy_closed_form(double r, double p, double y) {
  const double cp = std::cos(p), sp = std::sin(p);
  const double cy = std::cos(y), sy = std::sin(y);
  const double cr = std::cos(r), sr = std::sin(r);
  return {{cr * cy + sr * sp * sy, sr * cp, -cr * sy + sr * sp * cy,  //
           -sr * cy + cr * sp * sy, cr * cp, sr * sy + cr * sp * cy,  //
           cp * sy, -sp, cp * cy}};
}

}  // namespace

TEST_CASE("elemental rotations match their trigonometric definitions") {
  CHECK(elem_rot_x_left(0.0) == Matrix3::identity());
  CHECK(elem_rot_y_left(0.0) == Matrix3::identity());
  CHECK(elem_rot_z_left(0.0) == Matrix3::identity());

  CHECK(max_abs(elem_rot_x_left(kPi), Matrix3::diagonal(1, -1, -1)) < 1e-15);
  CHECK(max_abs(elem_rot_y_left(kHalfPi), Matrix3{{0, 0, -1, 0, 1, 0, 1, 0, 0}}) < 1e-15);
  CHECK(max_abs(elem_rot_z_left(kPi), Matrix3::diagonal(-1, -1, 1)) < 1e-15);

  const double p = 0.3, y = -0.7, r = 0.25;
  CHECK(max_abs(elem_rot_x_left(p),
                Matrix3{{1, 0, 0, 0, std::cos(p), std::sin(p), 0, -std::sin(p), std::cos(p)}}) < 1e-15);
  CHECK(max_abs(elem_rot_y_left(y),
                Matrix3{{std::cos(y), 0, -std::sin(y), 0, 1, 0, std::sin(y), 0, std::cos(y)}}) < 1e-15);
  CHECK(max_abs(elem_rot_z_left(r),
                Matrix3{{std::cos(r), std::sin(r), 0, -std::sin(r), std::cos(r), 0, 0, 0, 1}}) < 1e-15);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(elem_rot_x_left(nan), InvalidArgument);
  CHECK_THROWS_AS(elem_rot_y_left(INFINITY), InvalidArgument);
  CHECK_THROWS_AS(elem_rot_z_left(-INFINITY), InvalidArgument);
}

TEST_CASE("compose_pyr") {
  CHECK(compose_pyr({0, 0, 0}) == Matrix3::identity());

  SUBCASE("table pose against the expanded product") {
    const EulerPyr e = pyr_from_degrees(6.208, 5.876, -1.694);
    const Matrix3 r = compose_pyr(e);
    CHECK(is_rotation(r));
    CHECK(max_abs(r, pyr_closed_form(e.pitch, e.yaw, e.roll)) < 1e-15);
  }

  SUBCASE("naive product oracle") {
    const Matrix3 want = naive_multiply(naive_multiply(elem_rot_x_left(0.1), elem_rot_y_left(0.2)),
                                        elem_rot_z_left(0.3));
    CHECK(max_abs(compose_pyr({0.1, 0.2, 0.3}), want) < 1e-15);
  }

  SUBCASE("closure") {
    testing::Sampler s(11);
    for (int i = 0; i < 2000; ++i) CHECK(is_rotation(compose_pyr(s.euler_full()), 1e-12));
  }
}

TEST_CASE("compose_rpy") {
  CHECK(compose_rpy({0, 0, 0}) == Matrix3::identity());
  CHECK(max_abs(compose_rpy({0.2, 0.4, -0.6}), rpy_closed_form(0.2, 0.4, -0.6)) < 1e-15);

  testing::Sampler s(12);
  for (int i = 0; i < 200; ++i) {
    const double p = s.uniform(-kPi, kPi), y = s.uniform(-kPi, kPi);
    CHECK(compose_rpy({0.0, p, y}) == compose_pyr({p, y, 0.0}));
    const double r = s.uniform(-kPi, kPi);
    CHECK(max_abs(compose_rpy({r, p, y}), rpy_closed_form(r, p, y)) < 1e-15);
    CHECK(is_rotation(compose_rpy({r, p, y}), 1e-12));
  }
}

TEST_CASE("intrinsic XYZ equals extrinsic ZYX") {
  testing::Sampler s(13);
  for (int i = 0; i < 1000; ++i) {
    const EulerPyr e = s.euler_full();
    // Extrinsic: rotate about the fixed Z, then Y, then X, each left-multiplied.
    Matrix3 ext = elem_rot_z_left(e.roll);
    ext = naive_multiply(elem_rot_y_left(e.yaw), ext);
    ext = naive_multiply(elem_rot_x_left(e.pitch), ext);
    CHECK(max_abs(compose_pyr(e), ext) < 1e-14);

    // Transpose form: (X Y Z)^T = Z(-r) Y(-y) X(-p).
    const Matrix3 inv = naive_multiply(naive_multiply(elem_rot_z_left(-e.roll), elem_rot_y_left(-e.yaw)),
                                       elem_rot_x_left(-e.pitch));
    CHECK(max_abs(transpose(compose_pyr(e)), inv) < 1e-14);
  }
}

TEST_CASE("multiply") {
  testing::Sampler s(14);
  const Matrix3 a = s.rotation(), b = s.rotation(), c = s.rotation();
  CHECK(multiply(Matrix3::identity(), a) == a);
  CHECK(max_abs(multiply(a, transpose(a)), Matrix3::identity()) < 1e-12);
  CHECK(max_abs(multiply(multiply(a, b), c), multiply(a, multiply(b, c))) < 1e-12);
  CHECK(max_abs(multiply(a, b), naive_multiply(a, b)) < 1e-15);
}

TEST_CASE("is_rotation") {
  CHECK(is_rotation(Matrix3::identity(), 1e-9));
  for (double tol : {1e-12, 1e-3, 0.5}) CHECK_FALSE(is_rotation(Matrix3::diagonal(1, 1, -1), tol));
  CHECK_FALSE(is_rotation(Matrix3::diagonal(1, 1, 1.1)));
  Matrix3 bad = Matrix3::identity();
  bad.m[4] = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(is_rotation(bad, 1.0));
  testing::Sampler s(15);
  for (int i = 0; i < 100; ++i) CHECK(is_rotation(s.rotation(), 1e-9));
}

TEST_CASE("geodesic distance examples") {
  testing::Sampler s(16);
  for (int i = 0; i < 200; ++i) {
    const Matrix3 r = s.rotation();
    CHECK(geodesic_distance(r, r) == 0.0);
  }
  for (double theta : {-3.0, -1.0, -1e-6, 0.0, 1e-8, 0.5, 2.0, 3.1, kPi}) {
    CHECK(std::abs(geodesic_distance(Matrix3::identity(), elem_rot_z_left(theta)) - std::abs(theta)) < 1e-12);
  }
  const double d = geodesic_distance(compose_pyr({0.1, 0.2, 0.3}), compose_pyr({0.1, 0.2, 0.3 + 1e-3}));
  CHECK(std::abs(d - 1e-3) < 1e-9);

  CHECK_THROWS_AS(geodesic_distance(Matrix3::diagonal(1, 1, -1), Matrix3::identity()), InvalidArgument);
  CHECK_THROWS_AS(geodesic_distance(Matrix3::identity(), Matrix3::diagonal(2, 1, 1)), InvalidArgument);
}

TEST_CASE("geodesic distance agrees with the arccos form") {
  testing::Sampler s(17);
  for (int i = 0; i < 2000; ++i) {
    const Matrix3 a = s.rotation(), b = s.rotation();
    const double t = trace(multiply(a, transpose(b)));
    const double d = geodesic_distance(a, b);
    CHECK(std::abs(d - geodesic_from_trace(t)) < 1e-7);
    if (d > 0.01 && d < kPi - 0.01) CHECK(std::abs(d - std::acos((t - 1.0) / 2.0)) < 1e-12);
  }
}

TEST_CASE("geodesic metric axioms") {
  testing::Sampler s(18);
  for (int i = 0; i < 500; ++i) {
    const Matrix3 a = s.rotation(), b = s.rotation(), c = s.rotation(), q = s.rotation();
    const double dab = geodesic_distance(a, b);
    CHECK(dab == geodesic_distance(b, a));
    CHECK(dab >= 0.0);
    CHECK(dab <= kPi);
    CHECK(std::abs(geodesic_distance(multiply(q, a), multiply(q, b)) - dab) < 1e-12);
    CHECK(std::abs(geodesic_distance(multiply(a, q), multiply(b, q)) - dab) < 1e-12);
    CHECK(geodesic_distance(a, c) <= dab + geodesic_distance(b, c) + 1e-12);
  }
  // Zero exactly at coincidence; tiny perturbations register as tiny distances.
  const Matrix3 a = s.rotation();
  const Matrix3 near = multiply(a, elem_rot_x_left(1e-9));
  CHECK(max_abs(a, near) < 1e-7);
  CHECK(geodesic_distance(a, near) > 0.0);
  CHECK(geodesic_distance(a, near) < 1e-8);
  const Matrix3 far = multiply(a, elem_rot_x_left(1e-6));
  CHECK(geodesic_distance(a, far) == doctest::Approx(1e-6).epsilon(1e-6));
}

TEST_CASE("arccos form is clamp-safe") {
  for (double eps : {0.0, 1e-16, 1e-14, 1e-12}) {
    CHECK(geodesic_from_trace(3.0 + eps) == 0.0);
    CHECK(geodesic_from_trace(-1.0 - eps) == kPi);
  }
  CHECK(geodesic_from_trace(1.0) == doctest::Approx(kHalfPi));
}

TEST_CASE("angle canonicalization") {
  CHECK(wrap_angle(-kPi) == kPi);
  CHECK(wrap_angle(kPi) == kPi);
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kHalfPi) == -kHalfPi);
  testing::Sampler s(19);
  for (int i = 0; i < 1000; ++i) {
    const double a = s.uniform(-50.0, 50.0);
    const double w = wrap_angle(a);
    CHECK(w > -kPi);
    CHECK(w <= kPi);
    CHECK(std::abs(std::remainder(a - w, 2 * kPi)) < 1e-12);
  }
  const EulerPyr c = canonicalize(EulerPyr{-kPi, 4.0, -kPi});
  CHECK(c.pitch == kPi);
  CHECK(c.roll == kPi);
  CHECK(deg_to_rad(90.0) == kHalfPi);
  CHECK(deg_to_rad(180.0) == kPi);
  CHECK(rad_to_deg(kHalfPi) == 90.0);
}
