#pragma once

// Batch kernels over arrays of 3x3 matrices and 9-vectors.
//
// Every kernel has a scalar reference implementation and, where the build
// target allows it, AVX2 (x86-64) or NEON (aarch64) variants. Variants are
// written lane-per-record with the reference's operation order and without
// fused multiply-add, so all variants produce bit-identical results. The
// dispatched entry points pick the best variant supported by the running CPU.

#include <array>
#include <span>
#include <string_view>

#include "rotkit/rotation.hpp"

namespace rotkit::kernels {

using Vec9 = std::array<double, 9>;
using Mat9 = std::array<double, 81>;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Whether this binary contains the variant and the CPU can execute it.
bool isa_supported(Isa isa) noexcept;

/// Best supported variant, detected once.
Isa detected_isa() noexcept;

/// Variant the dispatched entry points currently use.
Isa active_isa() noexcept;

/// Overrides dispatch (tests and benchmarking). Throws InvalidArgument when
/// the variant is not supported. Not meant to race with kernel calls.
void force_isa(Isa isa);

/// Restores detected_isa().
void reset_isa() noexcept;

// Signatures shared by all variants. Spans must have matching lengths.
//
// angle_terms:     with m = a[k] * b[k]^T, c[k] = tr(m) - 1 and
//                  s[k] = |(m21 - m12, m02 - m20, m10 - m01)|, i.e. 2cos and
//                  2sin of the angle between a[k] and b[k]
// left_multiply:   out[k] = m * in[k]
// right_multiply:  out[k] = in[k] * m
// scatter9:        out += sum_k (v[k] - mean)(v[k] - mean)^T, row-major 9x9
//
// left_multiply/right_multiply allow out to alias in.
void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s);
void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out);
void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out);
void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out);

namespace scalar {
void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) noexcept;
void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) noexcept;
void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) noexcept;
void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ROTKIT_HAVE_AVX2_VARIANT 1
namespace avx2 {
void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) noexcept;
void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) noexcept;
void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) noexcept;
void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept;
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define ROTKIT_HAVE_NEON_VARIANT 1
namespace neon {
void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) noexcept;
void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) noexcept;
void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) noexcept;
void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept;
}  // namespace neon
#endif

}  // namespace rotkit::kernels
