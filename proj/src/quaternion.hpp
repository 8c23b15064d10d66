#pragma once

// Internal: unit quaternion (w, x, y, z) to rotation matrix. Quaternions are
// not part of the public API.

#include <cmath>

#include "rotkit/rotation.hpp"

namespace rotkit::detail {

inline RotationMatrix quaternion_to_matrix(double w, double x, double y, double z) noexcept {
  const double inv = 1.0 / std::sqrt(w * w + x * x + y * y + z * z);
  w *= inv;
  x *= inv;
  y *= inv;
  z *= inv;
  return {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
           2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

}  // namespace rotkit::detail
