#include "rotkit/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "rotkit/errors.hpp"
#include "rotkit/euler.hpp"
#include "rotkit/symmetric_eigen.hpp"
#include "quaternion.hpp"

namespace rotkit {

void validate(const SpiralSpec& spec) {
  if (spec.count < 1) throw InvalidArgument("spiral: count must be at least 1");
  if (!(std::isfinite(spec.turns) && spec.turns > 0.0))
    throw InvalidArgument("spiral: turns must be positive");
  const auto inside = [](double p) { return p > -kHalfPi && p < kHalfPi; };
  if (!(inside(spec.pitch_min) && inside(spec.pitch_max) && spec.pitch_min <= spec.pitch_max))
    throw InvalidArgument("spiral: pitch range must be ordered and inside (-90, 90) degrees");
}

std::vector<RotationMatrix> spiral_rotations(const SpiralSpec& spec) {
  validate(spec);
  // Margin that keeps |cos(yaw)| at twice the Gimbal threshold.
  const double yaw_limit = kHalfPi - std::asin(2.0 * kGimbalEps);
  std::vector<RotationMatrix> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double t =
        spec.count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(spec.count - 1);
    const double pitch = spec.pitch_min + t * (spec.pitch_max - spec.pitch_min);
    const double azimuth = 2.0 * kPi * spec.turns * t;
    const double yaw = std::clamp(std::asin(std::sin(azimuth)), -yaw_limit, yaw_limit);
    out.push_back(compose_pyr({pitch, yaw, 0.0}));
  }
  return out;
}

std::vector<RotationMatrix> densify_rolls(std::span<const RotationMatrix> poses, double budget,
                                          std::uint64_t seed, const DensifyOptions& options) {
  if (options.multiplier < 1) throw InvalidArgument("densify_rolls: multiplier must be at least 1");
  std::vector<RotationMatrix> out;
  out.reserve(poses.size() * options.multiplier);
  for (std::size_t i = 0; i < poses.size(); ++i) {
    for (std::size_t j = 0; j < options.multiplier; ++j) {
      RandomStream rng(seed, i * options.multiplier + j);
      out.push_back(random_augment(poses[i], budget, rng, options.policy).first);
    }
  }
  return out;
}

RotationMatrix random_rotation(RandomStream& rng) {
  double w, x, y, z, n2;
  do {
    w = rng.normal();
    x = rng.normal();
    y = rng.normal();
    z = rng.normal();
    n2 = w * w + x * x + y * y + z * z;
  } while (n2 < 1e-20);
  return detail::quaternion_to_matrix(w, x, y, z);
}

std::vector<RotationMatrix> random_rotations(std::size_t n, std::uint64_t seed) {
  std::vector<RotationMatrix> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RandomStream rng(seed, i);
    out.push_back(random_rotation(rng));
  }
  return out;
}

Vec9 flatten9(const RotationMatrix& r) noexcept { return r.m; }

Matrix3 unflatten9(const Vec9& v) noexcept { return Matrix3{v}; }

PcaResult pca_project(std::span<const Vec9> vectors, std::size_t k) {
  if (vectors.size() < 2) throw InvalidArgument("pca_project: need at least 2 vectors");
  if (k < 1 || k > 9) throw InvalidArgument("pca_project: k must lie in [1, 9]");

  PcaResult out;
  const double n = static_cast<double>(vectors.size());
  // Mean accumulated relative to the first vector, so a constant data set
  // reproduces its value exactly and centers to zero.
  const Vec9& ref = vectors[0];
  Vec9 offset{};
  for (const Vec9& v : vectors)
    for (std::size_t i = 0; i < 9; ++i) offset[i] += v[i] - ref[i];
  for (std::size_t i = 0; i < 9; ++i) out.mean[i] = ref[i] + offset[i] / n;

  kernels::Mat9 scatter{};
  kernels::scatter9(vectors, out.mean, scatter);
  SquareMatrix<9> cov;
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) cov[i][j] = scatter[9 * i + j] / (n - 1.0);
    out.covariance_trace += cov[i][i];
  }

  const SymmetricEigen<9> eig = jacobi_eigen<9>(cov);
  for (std::size_t i = 0; i < 9; ++i) out.all_eigenvalues[i] = eig.values[i];

  for (std::size_t c = 0; c < k; ++c) {
    Vec9 dir = eig.vectors[c];
    std::size_t lead = 0;
    for (std::size_t i = 1; i < 9; ++i)
      if (std::abs(dir[i]) > std::abs(dir[lead])) lead = i;
    if (dir[lead] < 0.0)
      for (double& x : dir) x = -x;
    out.components.push_back(dir);
    out.explained_variance.push_back(std::max(0.0, eig.values[c]));
  }

  out.projected.reserve(vectors.size());
  for (const Vec9& v : vectors) {
    std::vector<double> coords(k, 0.0);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < 9; ++i) coords[c] += (v[i] - out.mean[i]) * out.components[c][i];
    out.projected.push_back(std::move(coords));
  }
  return out;
}

EulerRangeStats euler_range_stats(std::span<const RotationMatrix> poses) {
  if (poses.empty()) throw InvalidArgument("euler_range_stats: empty pose list");
  EulerRangeStats s;
  s.count = poses.size();
  bool first = true;
  const auto widen = [&first](AngleRange& r, double deg) {
    if (first) {
      r = {deg, deg};
    } else {
      r.min_deg = std::min(r.min_deg, deg);
      r.max_deg = std::max(r.max_deg, deg);
    }
  };
  for (const RotationMatrix& r : poses) {
    const EulerPyr e = canonical_pyr(r);
    widen(s.pitch, rad_to_deg(e.pitch));
    widen(s.yaw, rad_to_deg(e.yaw));
    widen(s.roll, rad_to_deg(e.roll));
    first = false;
  }
  return s;
}

}  // namespace rotkit
