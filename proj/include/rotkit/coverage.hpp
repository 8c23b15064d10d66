#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rotkit/augment.hpp"
#include "rotkit/kernels.hpp"
#include "rotkit/random.hpp"
#include "rotkit/rotation.hpp"

namespace rotkit {

/// Camera path for zero-roll synthetic captures: pitch moves linearly from
/// pitch_min to pitch_max while the azimuth makes `turns` revolutions.
struct SpiralSpec {
  std::size_t count = 1440;
  double turns = 8.0;
  double pitch_min = deg_to_rad(-75.0);
  double pitch_max = deg_to_rad(75.0);
};

void validate(const SpiralSpec& spec);

/// compose_pyr(p_i, y_i, 0) along the spiral. The azimuth is folded into
/// yaw with asin(sin(.)) so the head never faces away from the camera, and
/// kept outside the Gimbal band so every pose extracts with zero roll.
std::vector<RotationMatrix> spiral_rotations(const SpiralSpec& spec);

struct DensifyOptions {
  std::size_t multiplier = 2;
  AugmentPolicy policy = AugmentPolicy::mixed;
};

/// For each input pose, `multiplier` random_augment draws. Draw j of pose i
/// uses RandomStream(seed, i * multiplier + j); outputs are grouped by input.
std::vector<RotationMatrix> densify_rolls(std::span<const RotationMatrix> poses, double budget,
                                          std::uint64_t seed, const DensifyOptions& options = {});

/// Haar-uniform rotation from a normalized Gaussian quaternion.
RotationMatrix random_rotation(RandomStream& rng);

/// n rotations; sample i uses RandomStream(seed, i).
std::vector<RotationMatrix> random_rotations(std::size_t n, std::uint64_t seed);

using kernels::Vec9;

Vec9 flatten9(const RotationMatrix& r) noexcept;
Matrix3 unflatten9(const Vec9& v) noexcept;

struct PcaResult {
  std::vector<Vec9> components;           // k orthonormal directions
  std::vector<double> explained_variance;  // k values, descending
  std::vector<std::vector<double>> projected;  // one k-vector per input
  Vec9 mean{};
  std::array<double, 9> all_eigenvalues{};  // full spectrum, descending
  double covariance_trace = 0.0;
};

/// PCA of 9-vectors: sample covariance (n - 1 denominator), Jacobi
/// eigen-decomposition, top-k components with their largest-magnitude entry
/// made positive, and the centered projections. Needs at least 2 vectors.
PcaResult pca_project(std::span<const Vec9> vectors, std::size_t k = 3);

struct AngleRange {
  double min_deg = 0.0;
  double max_deg = 0.0;
};

struct EulerRangeStats {
  AngleRange pitch;
  AngleRange yaw;
  AngleRange roll;
  std::size_t count = 0;
};

/// Ranges of canonical_pyr over the poses, in degrees. Non-empty input.
EulerRangeStats euler_range_stats(std::span<const RotationMatrix> poses);

}  // namespace rotkit
