#include "rotkit/drawing.hpp"

#include <cmath>
#include <sstream>

#include "rotkit/errors.hpp"
#include "text_format.hpp"

namespace rotkit {

AxisProjection project_axes(const RotationMatrix& r) {
  require_rotation(r, "project_axes input");
  // T r T with T = T^-1 = diag(1, -1, 1) flips the sign of entries (0,1),
  // (1,0), (1,2) and (2,1). Only rows 0 and 1 are needed.
  return {
      {r(0, 0), -r(1, 0)},
      {-r(0, 1), r(1, 1)},
      {r(0, 2), -r(1, 2)},
  };
}

AxisProjection reference_draw_axis(const EulerPyr& e) {
  const double p = e.pitch;
  const double y = -e.yaw;
  const double r = e.roll;
  const double x1 = std::cos(y) * std::cos(r);
  const double y1 = std::cos(p) * std::sin(r) + std::cos(r) * std::sin(p) * std::sin(y);
  const double x2 = -std::cos(y) * std::sin(r);
  const double y2 = std::cos(p) * std::cos(r) - std::sin(p) * std::sin(y) * std::sin(r);
  const double x3 = std::sin(y);
  const double y3 = -std::cos(y) * std::sin(p);
  return {{x1, y1}, {x2, y2}, {x3, y3}};
}

AxisSegments segments(const AxisProjection& p, const DrawSpec& spec) {
  if (!(spec.size > 0.0)) throw InvalidArgument("segments: size must be positive");
  const auto seg = [&](const Vec2& axis, std::string_view color) {
    return Segment{spec.center,
                   {spec.center.x + spec.size * axis.x, spec.center.y + spec.size * axis.y},
                   color};
  };
  return {seg(p.x_axis, "#FF0000"), seg(p.y_axis, "#00FF00"), seg(p.z_axis, "#0000FF")};
}

std::string render_svg(const AxisSegments& segs, double image_width, double image_height,
                       const std::optional<std::string>& background_href) {
  if (!(image_width > 0.0 && image_height > 0.0))
    throw InvalidArgument("render_svg: image size must be positive");
  const std::string w = text::fixed(image_width, 0);
  const std::string h = text::fixed(image_height, 0);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" "
     << "version=\"1.1\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' '
     << h << "\">\n";
  if (background_href) {
    os << "  <image xlink:href=\"" << text::xml_escape(*background_href)
       << "\" x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\"/>\n";
  }
  for (const Segment& s : segs) {
    os << "  <line x1=\"" << text::fixed(s.from.x, 3) << "\" y1=\"" << text::fixed(s.from.y, 3)
       << "\" x2=\"" << text::fixed(s.to.x, 3) << "\" y2=\"" << text::fixed(s.to.y, 3)
       << "\" stroke=\"" << s.color << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rotkit
