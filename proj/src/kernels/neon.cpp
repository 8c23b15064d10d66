// NEON kernels (aarch64): two records per iteration, one record per lane.
// Uses separate multiply and add (no vfmaq) to match the scalar kernels.

#include "rotkit/kernels.hpp"

#if defined(ROTKIT_HAVE_NEON_VARIANT)

#include <arm_neon.h>

#include <cstddef>

namespace rotkit::kernels::neon {

namespace {

constexpr std::size_t kLanes = 2;

inline float64x2_t pair_entry(const Matrix3* base, std::size_t e) {
  return vcombine_f64(vld1_f64(&base[0].m[e]), vld1_f64(&base[1].m[e]));
}

inline void load_lanes(const Matrix3* base, float64x2_t (&r)[9]) {
  for (std::size_t e = 0; e < 9; ++e) r[e] = pair_entry(base, e);
}

inline void store_lanes(const float64x2_t (&o)[9], Matrix3* out) {
  for (std::size_t e = 0; e < 9; ++e) {
    out[0].m[e] = vgetq_lane_f64(o[e], 0);
    out[1].m[e] = vgetq_lane_f64(o[e], 1);
  }
}

}  // namespace

void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) noexcept {
  const std::size_t n = c.size();
  const float64x2_t one = vdupq_n_f64(1.0);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    float64x2_t p[9], q[9], m[9];
    load_lanes(&a[k], p);
    load_lanes(&b[k], q);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        float64x2_t t = vmulq_f64(p[3 * i + 0], q[3 * j + 0]);
        t = vaddq_f64(t, vmulq_f64(p[3 * i + 1], q[3 * j + 1]));
        t = vaddq_f64(t, vmulq_f64(p[3 * i + 2], q[3 * j + 2]));
        m[3 * i + j] = t;
      }
    }
    const float64x2_t tr = vsubq_f64(vaddq_f64(vaddq_f64(m[0], m[4]), m[8]), one);
    const float64x2_t w0 = vsubq_f64(m[7], m[5]);
    const float64x2_t w1 = vsubq_f64(m[2], m[6]);
    const float64x2_t w2 = vsubq_f64(m[3], m[1]);
    float64x2_t ss = vmulq_f64(w0, w0);
    ss = vaddq_f64(ss, vmulq_f64(w1, w1));
    ss = vaddq_f64(ss, vmulq_f64(w2, w2));
    vst1q_f64(&c[k], tr);
    vst1q_f64(&s[k], vsqrtq_f64(ss));
  }
  scalar::angle_terms(a.subspan(k), b.subspan(k), c.subspan(k), s.subspan(k));
}

void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) noexcept {
  const std::size_t n = out.size();
  float64x2_t mb[9];
  for (std::size_t e = 0; e < 9; ++e) mb[e] = vdupq_n_f64(m.m[e]);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    float64x2_t r[9];
    load_lanes(&in[k], r);
    float64x2_t o[9];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        float64x2_t s = vmulq_f64(mb[3 * i + 0], r[0 + j]);
        s = vaddq_f64(s, vmulq_f64(mb[3 * i + 1], r[3 + j]));
        s = vaddq_f64(s, vmulq_f64(mb[3 * i + 2], r[6 + j]));
        o[3 * i + j] = s;
      }
    }
    store_lanes(o, &out[k]);
  }
  scalar::left_multiply(m, in.subspan(k), out.subspan(k));
}

void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) noexcept {
  const std::size_t n = out.size();
  float64x2_t mb[9];
  for (std::size_t e = 0; e < 9; ++e) mb[e] = vdupq_n_f64(m.m[e]);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    float64x2_t r[9];
    load_lanes(&in[k], r);
    float64x2_t o[9];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        float64x2_t s = vmulq_f64(r[3 * i + 0], mb[0 + j]);
        s = vaddq_f64(s, vmulq_f64(r[3 * i + 1], mb[3 + j]));
        s = vaddq_f64(s, vmulq_f64(r[3 * i + 2], mb[6 + j]));
        o[3 * i + j] = s;
      }
    }
    store_lanes(o, &out[k]);
  }
  scalar::right_multiply(in.subspan(k), m, out.subspan(k));
}

void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept {
  double* o = out.data();
  for (const Vec9& x : v) {
    double d[9];
    for (std::size_t i = 0; i < 9; ++i) d[i] = x[i] - mean[i];
    for (std::size_t i = 0; i < 9; ++i) {
      const float64x2_t di = vdupq_n_f64(d[i]);
      double* row = o + 9 * i;
      for (std::size_t j = 0; j < 8; j += 2)
        vst1q_f64(row + j, vaddq_f64(vld1q_f64(row + j), vmulq_f64(di, vld1q_f64(&d[j]))));
      row[8] = row[8] + d[i] * d[8];
    }
  }
}

}  // namespace rotkit::kernels::neon

#endif
