#include "rotkit/registration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quaternion.hpp"
#include "rotkit/errors.hpp"
#include "rotkit/symmetric_eigen.hpp"

namespace rotkit {

namespace {

// Smallest accepted ratio of the second to the first singular value of the
// cross-covariance.
constexpr double kRankTol = 1e-7;

Point3 centroid(const std::vector<Point3>& pts) {
  Point3 c{0.0, 0.0, 0.0};
  for (const Point3& p : pts)
    for (std::size_t i = 0; i < 3; ++i) c[i] += p[i];
  for (double& x : c) x /= static_cast<double>(pts.size());
  return c;
}

}  // namespace

RotationMatrix horn_rotation(const LandmarkSet& src, const LandmarkSet& dst) {
  if (src.points.size() != dst.points.size())
    throw InvalidArgument("horn_rotation: point counts differ (" + std::to_string(src.points.size()) +
                          " vs " + std::to_string(dst.points.size()) + ")");
  if (src.points.size() < 3) throw InvalidArgument("horn_rotation: need at least 3 points");
  for (const auto* set : {&src, &dst})
    for (const Point3& p : set->points)
      for (double v : p)
        if (!std::isfinite(v)) throw InvalidArgument("horn_rotation: non-finite coordinate");

  const Point3 cs = centroid(src.points);
  const Point3 cd = centroid(dst.points);

  // s[a][b] = sum of src_a * dst_b over centered points.
  SquareMatrix<3> s{};
  for (std::size_t k = 0; k < src.points.size(); ++k) {
    for (std::size_t a = 0; a < 3; ++a) {
      const double pa = src.points[k][a] - cs[a];
      for (std::size_t b = 0; b < 3; ++b) s[a][b] += pa * (dst.points[k][b] - cd[b]);
    }
  }

  SquareMatrix<3> sts{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) sts[i][j] += s[k][i] * s[k][j];
  const SymmetricEigen<3> sv = jacobi_eigen<3>(sts);
  const double sigma1 = std::sqrt(std::max(0.0, sv.values[0]));
  const double sigma2 = std::sqrt(std::max(0.0, sv.values[1]));
  if (!(sigma1 > 0.0) || sigma2 <= kRankTol * sigma1)
    throw DegenerateInput("horn_rotation: point configuration does not determine a rotation");

  const double sxx = s[0][0], sxy = s[0][1], sxz = s[0][2];
  const double syx = s[1][0], syy = s[1][1], syz = s[1][2];
  const double szx = s[2][0], szy = s[2][1], szz = s[2][2];
  const SquareMatrix<4> n{{
      {sxx + syy + szz, syz - szy, szx - sxz, sxy - syx},
      {syz - szy, sxx - syy - szz, sxy + syx, szx + sxz},
      {szx - sxz, sxy + syx, -sxx + syy - szz, syz + szy},
      {sxy - syx, szx + sxz, syz + szy, -sxx - syy + szz},
  }};
  const SymmetricEigen<4> eig = jacobi_eigen<4>(n);
  const auto& q = eig.vectors[0];
  return detail::quaternion_to_matrix(q[0], q[1], q[2], q[3]);
}

RotationMatrix panoptic_rotation(const CameraExtrinsic& c, const RotationMatrix& r_horn) {
  require_rotation(c.rotation_part, "camera extrinsic rotation", kExtrinsicTol);
  require_rotation(r_horn, "Horn rotation");
  return multiply(multiply(kImageFromCamera, c.rotation_part), r_horn);
}

}  // namespace rotkit
