#pragma once

#include <numbers>

namespace rotkit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Written as a fraction of a half turn so 90, 180 and 45 degrees map to the
// same doubles as kHalfPi, kPi and kPi / 4.
constexpr double deg_to_rad(double deg) noexcept { return deg / 180.0 * kPi; }
constexpr double rad_to_deg(double rad) noexcept { return rad / kPi * 180.0; }

/// Maps any finite angle into (-pi, pi]; -pi itself maps to pi.
double wrap_angle(double rad) noexcept;

/// Pitch/yaw/roll of the left-handed intrinsic XYZ convention (radians).
struct EulerPyr {
  double pitch = 0.0;
  double yaw = 0.0;
  double roll = 0.0;

  friend bool operator==(const EulerPyr&, const EulerPyr&) = default;
};

/// Roll/pitch/yaw of the left-handed intrinsic ZXY convention (radians).
struct EulerRpy {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;

  friend bool operator==(const EulerRpy&, const EulerRpy&) = default;
};

/// Component-wise wrap_angle.
EulerPyr canonicalize(const EulerPyr& e) noexcept;
EulerRpy canonicalize(const EulerRpy& e) noexcept;

EulerPyr pyr_from_degrees(double pitch, double yaw, double roll) noexcept;

}  // namespace rotkit
