#pragma once

#include <span>
#include <string_view>
#include <utility>

#include "rotkit/random.hpp"
#include "rotkit/rotation.hpp"

namespace rotkit {

enum class AugmentKind { rotate, flip };

/// A 2D image operation. For rotate, `angle` is phi (counter-clockwise on
/// screen). For flip, `angle` is theta of the mirror line L_theta through the
/// image center, measured counter-clockwise from the horizontal axis; it is
/// meaningful modulo pi.
struct AugmentOp {
  AugmentKind kind = AugmentKind::rotate;
  double angle = 0.0;

  friend bool operator==(const AugmentOp&, const AugmentOp&) = default;
};

std::string_view kind_name(AugmentKind kind) noexcept;

/// Image-space coordinates: origin top-left, y down.
struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Label of the image rotated by phi counter-clockwise:
/// [[cos, -sin, 0], [sin, cos, 0], [0, 0, 1]] * r.
RotationMatrix rotate_image_label(const RotationMatrix& r, double phi);

/// Label of the image mirrored across L_theta:
/// [[cos 2t, sin 2t, 0], [sin 2t, -cos 2t, 0], [0, 0, 1]] * r * diag(-1, 1, 1).
RotationMatrix flip_image_label(const RotationMatrix& r, double theta);

RotationMatrix apply(const AugmentOp& op, const RotationMatrix& r);

/// Left factor of the label transform (the extrinsic part). For flips the
/// full transform also right-multiplies by diag(-1, 1, 1).
Matrix3 extrinsic_factor(const AugmentOp& op);

/// Applies one op to many labels through the batch kernels. Results equal
/// apply(op, r) bit-for-bit. Validates every input.
void apply_batch(const AugmentOp& op, std::span<const RotationMatrix> in, std::span<RotationMatrix> out);

enum class CorollaryCase { horizontal, vertical, both_axes, diagonal, rot45 };

/// Closed-form special cases: flip(pi/2), flip(0), diag(-1,-1,1) * r,
/// flip(pi/4) and rotate(pi/4).
RotationMatrix corollary_case(const RotationMatrix& r, CorollaryCase c);

enum class AugmentPolicy { mixed, rotate_only, flip_only };

/// Randomized training-time augmentation. With probability 1/2 rotates by
/// u ~ U[-budget, budget]; otherwise flips across L_v with v ~ U[pi/2 - budget,
/// pi/2] (a near-horizontal mirror). `budget` must lie in [0, pi/2].
std::pair<RotationMatrix, AugmentOp> random_augment(const RotationMatrix& r, double budget,
                                                    RandomStream& rng,
                                                    AugmentPolicy policy = AugmentPolicy::mixed);

/// Moves a pixel the way `op` moves image content: rotation about, or mirror
/// across a line through, the image center ((width-1)/2, (height-1)/2).
PixelPoint map_pixel(const AugmentOp& op, PixelPoint pt, double width, double height);

}  // namespace rotkit
