#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rotkit/augment.hpp"
#include "rotkit/rotation.hpp"

namespace rotkit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Image-plane directions (y down) of the head's x, y and z axes.
struct AxisProjection {
  Vec2 x_axis;
  Vec2 y_axis;
  Vec2 z_axis;
};

struct DrawSpec {
  PixelPoint center;
  double size = 100.0;
};

struct Segment {
  PixelPoint from;
  PixelPoint to;
  std::string_view color;  // "#FF0000", "#00FF00" or "#0000FF"
};

/// Segments in x (red), y (green), z (blue) order.
using AxisSegments = std::array<Segment, 3>;

/// Columns of T * r * T with T = diag(1, -1, 1), restricted to their first
/// two rows. Needs no Euler angles.
AxisProjection project_axes(const RotationMatrix& r);

/// Euler-angle drawing routine in the form popularized by HopeNet's
/// draw_axis(): yaw is negated first, then the closed-form endpoints are
/// evaluated. Kept as an independent cross-check of project_axes.
AxisProjection reference_draw_axis(const EulerPyr& e);

/// segment_k = (center, center + size * axis_k). size must be > 0.
AxisSegments segments(const AxisProjection& p, const DrawSpec& spec);

/// SVG 1.1 document with the three segments (and an optional background
/// image referenced by path, never read). Byte-deterministic.
std::string render_svg(const AxisSegments& segs, double image_width, double image_height,
                       const std::optional<std::string>& background_href = std::nullopt);

}  // namespace rotkit
