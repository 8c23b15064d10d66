#include "rotkit/euler.hpp"

#include <algorithm>
#include <cmath>

#include "rotkit/errors.hpp"

namespace rotkit {

namespace {

double shift_by_pi(double angle) noexcept { return angle >= 0.0 ? angle - kPi : angle + kPi; }

}  // namespace

namespace detail {

PyrSolutions pyr_regular(const RotationMatrix& r) {
  const double y1 = std::asin(std::clamp(-r(0, 2), -1.0, 1.0));
  const double c = std::cos(y1);
  const double y2 = y1 >= 0.0 ? kPi - y1 : -kPi - y1;
  const double p1 = std::atan2(r(1, 2) / c, r(2, 2) / c);
  const double r1 = std::atan2(r(0, 1) / c, r(0, 0) / c);

  PyrSolutions out;
  out.kind = PyrKind::regular;
  out.primary = canonicalize(EulerPyr{p1, y1, r1});
  out.secondary = canonicalize(EulerPyr{shift_by_pi(p1), y2, shift_by_pi(r1)});
  return out;
}

PyrSolutions pyr_gimbal(const RotationMatrix& r) {
  PyrSolutions out;
  if (r(0, 2) <= 0.0) {
    // yaw = +pi/2: R10 = sin(p - r), R11 = cos(p - r).
    const double diff = std::atan2(r(1, 0), r(1, 1));
    const double p = diff / 2.0;
    out.kind = PyrKind::gimbal_up;
    out.primary = {p, kHalfPi, -p};
    out.gimbal_sum = 2.0 * p;
  } else {
    // yaw = -pi/2: R10 = -sin(p + r), R11 = cos(p + r).
    const double sum = std::atan2(-r(1, 0), r(1, 1));
    const double p = sum / 2.0;
    out.kind = PyrKind::gimbal_down;
    out.primary = {p, -kHalfPi, p};
    out.gimbal_sum = 2.0 * p;
  }
  return out;
}

}  // namespace detail

PyrSolutions extract_pyr(const RotationMatrix& r, double gimbal_eps) {
  require_rotation(r, "extract_pyr input");
  if (!(gimbal_eps > 0.0)) throw InvalidArgument("extract_pyr: gimbal_eps must be positive");
  const double y1 = std::asin(std::clamp(-r(0, 2), -1.0, 1.0));
  if (std::abs(std::cos(y1)) > gimbal_eps) return detail::pyr_regular(r);
  return detail::pyr_gimbal(r);
}

EulerPyr canonical_pyr(const RotationMatrix& r) { return extract_pyr(r).primary; }

RpySolution extract_rpy(const RotationMatrix& r, double gimbal_eps) {
  require_rotation(r, "extract_rpy input");
  if (!(gimbal_eps > 0.0)) throw InvalidArgument("extract_rpy: gimbal_eps must be positive");

  // R = R_Z(r') R_X(p') R_Y(y'):  R21 = -sin p',  R20 = sin y' cos p',
  // R22 = cos p' cos y',  R01 = sin r' cos p',  R11 = cos r' cos p'.
  const double p = std::asin(std::clamp(-r(2, 1), -1.0, 1.0));
  const double c = std::cos(p);
  RpySolution out;
  if (std::abs(c) > gimbal_eps) {
    out.kind = RpyKind::regular;
    out.value = canonicalize(EulerRpy{std::atan2(r(0, 1) / c, r(1, 1) / c), p,
                                      std::atan2(r(2, 0) / c, r(2, 2) / c)});
    return out;
  }

  out.kind = RpyKind::gimbal;
  if (r(2, 1) <= 0.0) {
    // p' = +pi/2: R00 = cos(r' - y'), R02 = sin(r' - y').
    const double half = std::atan2(r(0, 2), r(0, 0)) / 2.0;
    out.value = {half, kHalfPi, -half};
  } else {
    // p' = -pi/2: R00 = cos(r' + y'), R02 = -sin(r' + y').
    const double half = std::atan2(-r(0, 2), r(0, 0)) / 2.0;
    out.value = {half, -kHalfPi, half};
  }
  return out;
}

EulerRpy pyr_to_rpy(const EulerPyr& e) { return extract_rpy(compose_pyr(e)).value; }

EulerPyr rpy_to_pyr(const EulerRpy& e) { return canonical_pyr(compose_rpy(e)); }

}  // namespace rotkit
