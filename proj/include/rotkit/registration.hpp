#pragma once

#include <array>
#include <span>
#include <vector>

#include "rotkit/rotation.hpp"

namespace rotkit {

using Point3 = std::array<double, 3>;

/// Corresponded 3D landmarks (model units).
struct LandmarkSet {
  std::vector<Point3> points;
};

/// Rotation block of a camera extrinsic matrix.
struct CameraExtrinsic {
  RotationMatrix rotation_part = Matrix3::identity();
};

/// Tolerance for camera extrinsics read from calibration files.
inline constexpr double kExtrinsicTol = 1e-6;

/// Flip of the camera's y and z axes into image space.
inline constexpr Matrix3 kImageFromCamera = Matrix3::diagonal(1.0, -1.0, -1.0);

/// Least-squares rotation R minimizing sum |(dst_i - c_dst) - R (src_i - c_src)|^2
/// by Horn's closed-form quaternion method. Requires equal sizes >= 3 and a
/// cross-covariance of rank >= 2 (throws DegenerateInput otherwise).
RotationMatrix horn_rotation(const LandmarkSet& src, const LandmarkSet& dst);

/// kImageFromCamera * c.rotation_part * r_horn.
RotationMatrix panoptic_rotation(const CameraExtrinsic& c, const RotationMatrix& r_horn);

}  // namespace rotkit
