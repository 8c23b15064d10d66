#pragma once

#include <optional>

#include "rotkit/rotation.hpp"

namespace rotkit {

/// Default Gimbal threshold on |cos(yaw)| (about 0.0057 degrees from +-90).
inline constexpr double kGimbalEps = 1e-4;

enum class PyrKind { regular, gimbal_up, gimbal_down };

/// All pitch/yaw/roll readings of one rotation.
///
/// Outside Gimbal lock there are exactly two: `primary` has yaw in
/// [-pi/2, pi/2] (the 300W-LP labeling choice) and `secondary` has yaw
/// pi - y1 or -pi - y1 with pitch and roll shifted by pi. At yaw = +-pi/2
/// only p - r (gimbal_up) or p + r (gimbal_down) is determined; it is
/// reported in `gimbal_sum` and split evenly so |p|, |r| <= pi/2.
struct PyrSolutions {
  PyrKind kind = PyrKind::regular;
  EulerPyr primary;
  std::optional<EulerPyr> secondary;
  std::optional<double> gimbal_sum;
};

enum class RpyKind { regular, gimbal };

struct RpySolution {
  RpyKind kind = RpyKind::regular;
  EulerRpy value;
};

/// Closed-form pitch/yaw/roll extraction. Input must be a rotation at
/// kOrthoTol; it is not re-orthonormalized.
PyrSolutions extract_pyr(const RotationMatrix& r, double gimbal_eps = kGimbalEps);

/// extract_pyr(r).primary.
EulerPyr canonical_pyr(const RotationMatrix& r);

/// Roll/pitch/yaw extraction for the R_Z(r') R_X(p') R_Y(y') sequence.
/// At p' = +-pi/2 the coupled angle is split equally between yaw and roll.
RpySolution extract_rpy(const RotationMatrix& r, double gimbal_eps = kGimbalEps);

EulerRpy pyr_to_rpy(const EulerPyr& e);
EulerPyr rpy_to_pyr(const EulerRpy& e);

namespace detail {
// Branch formulas without the threshold test; used by extract_pyr and by the
// branch-continuity tests. pyr_regular requires cos(yaw) != 0.
PyrSolutions pyr_regular(const RotationMatrix& r);
PyrSolutions pyr_gimbal(const RotationMatrix& r);
}  // namespace detail

}  // namespace rotkit
