#include "rotkit/angles.hpp"

#include <cmath>

namespace rotkit {

double wrap_angle(double rad) noexcept {
  if (rad > -kPi && rad <= kPi) return rad;
  double r = std::remainder(rad, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  if (r > kPi) r -= 2.0 * kPi;
  return r;
}

EulerPyr canonicalize(const EulerPyr& e) noexcept {
  return {wrap_angle(e.pitch), wrap_angle(e.yaw), wrap_angle(e.roll)};
}

EulerRpy canonicalize(const EulerRpy& e) noexcept {
  return {wrap_angle(e.roll), wrap_angle(e.pitch), wrap_angle(e.yaw)};
}

EulerPyr pyr_from_degrees(double pitch, double yaw, double roll) noexcept {
  return {deg_to_rad(pitch), deg_to_rad(yaw), deg_to_rad(roll)};
}

}  // namespace rotkit
