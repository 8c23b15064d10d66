#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rotkit/angles.hpp"
#include "rotkit/coverage.hpp"
#include "rotkit/rotation.hpp"

namespace testing {

using rotkit::EulerPyr;
using rotkit::Matrix3;
using rotkit::RotationMatrix;

// Test-side generator, kept separate from the library's RandomStream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  EulerPyr euler_full() {
    return {uniform(-rotkit::kPi, rotkit::kPi), uniform(-rotkit::kPi, rotkit::kPi),
            uniform(-rotkit::kPi, rotkit::kPi)};
  }

  // Yaw strictly inside the primary range, away from Gimbal lock.
  EulerPyr euler_primary() {
    return {uniform(-rotkit::kPi, rotkit::kPi), uniform(-1.5, 1.5), uniform(-rotkit::kPi, rotkit::kPi)};
  }

  RotationMatrix rotation() { return rotkit::compose_pyr(euler_full()); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Textbook triple loop, independent of rotkit::multiply.
inline Matrix3 naive_multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[3 * i + k] * b.m[3 * k + j];
      out.m[3 * i + j] = s;
    }
  }
  return out;
}

inline double max_abs(const Matrix3& a, const Matrix3& b) {
  double worst = 0.0;
  for (int k = 0; k < 9; ++k) worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
  return worst;
}

inline double angle_diff(double a, double b) { return std::abs(rotkit::wrap_angle(a - b)); }

}  // namespace testing
