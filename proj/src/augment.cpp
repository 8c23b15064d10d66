#include "rotkit/augment.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rotkit/errors.hpp"
#include "rotkit/kernels.hpp"

namespace rotkit {

namespace {

struct CosSin {
  double c;
  double s;
};

// cos/sin with exact values at exact multiples of pi/2, so that quarter-turn
// rotations and axis-aligned mirrors do not leave 1e-16 residue in labels.
CosSin cos_sin(double angle) {
  if (!std::isfinite(angle)) throw InvalidArgument("augmentation angle must be finite");
  const double quarters = angle / kHalfPi;
  if (quarters == std::nearbyint(quarters) && std::abs(quarters) < 1e9) {
    switch (static_cast<long long>(quarters) & 3) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return {std::cos(angle), std::sin(angle)};
}

constexpr Matrix3 kMirrorX = Matrix3::diagonal(-1.0, 1.0, 1.0);

double reduce_line_angle(double theta) { return std::remainder(theta, kPi); }

Matrix3 image_rotation(double phi) {
  const auto [c, s] = cos_sin(phi);
  return {{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Matrix3 line_reflection(double theta) {
  const auto [c, s] = cos_sin(2.0 * reduce_line_angle(theta));
  return {{c, s, 0, s, -c, 0, 0, 0, 1}};
}

}  // namespace

std::string_view kind_name(AugmentKind kind) noexcept {
  return kind == AugmentKind::rotate ? "rotate" : "flip";
}

RotationMatrix rotate_image_label(const RotationMatrix& r, double phi) {
  require_rotation(r, "rotate_image_label input");
  return multiply(image_rotation(phi), r);
}

RotationMatrix flip_image_label(const RotationMatrix& r, double theta) {
  require_rotation(r, "flip_image_label input");
  return multiply(multiply(line_reflection(theta), r), kMirrorX);
}

RotationMatrix apply(const AugmentOp& op, const RotationMatrix& r) {
  return op.kind == AugmentKind::rotate ? rotate_image_label(r, op.angle)
                                        : flip_image_label(r, op.angle);
}

Matrix3 extrinsic_factor(const AugmentOp& op) {
  return op.kind == AugmentKind::rotate ? image_rotation(op.angle) : line_reflection(op.angle);
}

void apply_batch(const AugmentOp& op, std::span<const RotationMatrix> in,
                 std::span<RotationMatrix> out) {
  if (in.size() != out.size()) throw InvalidArgument("apply_batch: span sizes differ");
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (!is_rotation(in[k]))
      throw InvalidArgument("apply_batch: input " + std::to_string(k) + " is not a rotation matrix");
  }
  kernels::left_multiply(extrinsic_factor(op), in, out);
  if (op.kind == AugmentKind::flip) kernels::right_multiply(out, kMirrorX, out);
}

RotationMatrix corollary_case(const RotationMatrix& r, CorollaryCase c) {
  require_rotation(r, "corollary_case input");
  switch (c) {
    case CorollaryCase::horizontal:
      return multiply(multiply(kMirrorX, r), kMirrorX);
    case CorollaryCase::vertical:
      return multiply(multiply(Matrix3::diagonal(1.0, -1.0, 1.0), r), kMirrorX);
    case CorollaryCase::both_axes:
      return multiply(Matrix3::diagonal(-1.0, -1.0, 1.0), r);
    case CorollaryCase::diagonal: {
      constexpr Matrix3 swap_xy{{0, 1, 0, 1, 0, 0, 0, 0, 1}};
      return multiply(multiply(swap_xy, r), kMirrorX);
    }
    case CorollaryCase::rot45: {
      const double h = std::sqrt(0.5);
      const Matrix3 rot{{h, -h, 0, h, h, 0, 0, 0, 1}};
      return multiply(rot, r);
    }
  }
  throw InvalidArgument("corollary_case: unknown case");
}

std::pair<RotationMatrix, AugmentOp> random_augment(const RotationMatrix& r, double budget,
                                                    RandomStream& rng, AugmentPolicy policy) {
  if (!(budget >= 0.0 && budget <= kHalfPi))
    throw InvalidArgument("random_augment: budget must lie in [0, pi/2] radians");
  const bool coin_rotate = rng.uniform() < 0.5;
  const bool rotate = policy == AugmentPolicy::rotate_only ||
                      (policy == AugmentPolicy::mixed && coin_rotate);
  AugmentOp op;
  if (rotate) {
    op = {AugmentKind::rotate, rng.uniform(-budget, budget)};
  } else {
    op = {AugmentKind::flip, rng.uniform(kHalfPi - budget, kHalfPi)};
  }
  return {apply(op, r), op};
}

PixelPoint map_pixel(const AugmentOp& op, PixelPoint pt, double width, double height) {
  if (!(width > 0.0 && height > 0.0)) throw InvalidArgument("map_pixel: image size must be positive");
  const double cx = (width - 1.0) / 2.0;
  const double cy = (height - 1.0) / 2.0;
  const double dx = pt.x - cx;
  const double dy = pt.y - cy;
  if (op.kind == AugmentKind::rotate) {
    // Counter-clockwise as seen on screen, where y grows downwards.
    const auto [c, s] = cos_sin(op.angle);
    return {cx + c * dx + s * dy, cy - s * dx + c * dy};
  }
  // Reflect in y-up coordinates (u, v) = (dx, -dy), then map back.
  const auto [c, s] = cos_sin(2.0 * reduce_line_angle(op.angle));
  const double u = dx;
  const double v = -dy;
  const double u2 = c * u + s * v;
  const double v2 = s * u - c * v;
  return {cx + u2, cy - v2};
}

}  // namespace rotkit
