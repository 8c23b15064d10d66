// AVX2 kernels: four records per iteration, one record per lane.
//
// Only the functions below carry the avx2 target attribute; the translation
// unit is built for the baseline ISA so inline functions emitted here stay
// safe to share with non-AVX code. No FMA: results match the scalar kernels.

#include "rotkit/kernels.hpp"

#if defined(ROTKIT_HAVE_AVX2_VARIANT)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#define ROTKIT_AVX2 __attribute__((target("avx2")))

namespace rotkit::kernels::avx2 {

static_assert(sizeof(Matrix3) == 9 * sizeof(double), "Matrix3 must be densely packed");

namespace {

constexpr std::size_t kLanes = 4;

// Entry e of matrices base[0..3].
ROTKIT_AVX2 inline __m256d gather_entry(const Matrix3* base, std::size_t e) {
  const __m256i stride = _mm256_setr_epi64x(0, 9, 18, 27);
  return _mm256_i64gather_pd(base->m.data() + e, stride, 8);
}

ROTKIT_AVX2 inline void load_lanes(const Matrix3* base, __m256d (&r)[9]) {
  for (std::size_t e = 0; e < 9; ++e) r[e] = gather_entry(base, e);
}

ROTKIT_AVX2 inline void store_lanes(const __m256d (&o)[9], Matrix3* out) {
  alignas(32) double tmp[9][kLanes];
  for (std::size_t e = 0; e < 9; ++e) _mm256_store_pd(tmp[e], o[e]);
  for (std::size_t lane = 0; lane < kLanes; ++lane)
    for (std::size_t e = 0; e < 9; ++e) out[lane].m[e] = tmp[e][lane];
}

}  // namespace

ROTKIT_AVX2 void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b,
                             std::span<double> c, std::span<double> s) noexcept {
  const std::size_t n = c.size();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256d p[9], q[9], m[9];
    load_lanes(&a[k], p);
    load_lanes(&b[k], q);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        __m256d t = _mm256_mul_pd(p[3 * i + 0], q[3 * j + 0]);
        t = _mm256_add_pd(t, _mm256_mul_pd(p[3 * i + 1], q[3 * j + 1]));
        t = _mm256_add_pd(t, _mm256_mul_pd(p[3 * i + 2], q[3 * j + 2]));
        m[3 * i + j] = t;
      }
    }
    const __m256d tr = _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(m[0], m[4]), m[8]), one);
    const __m256d w0 = _mm256_sub_pd(m[7], m[5]);
    const __m256d w1 = _mm256_sub_pd(m[2], m[6]);
    const __m256d w2 = _mm256_sub_pd(m[3], m[1]);
    __m256d ss = _mm256_mul_pd(w0, w0);
    ss = _mm256_add_pd(ss, _mm256_mul_pd(w1, w1));
    ss = _mm256_add_pd(ss, _mm256_mul_pd(w2, w2));
    _mm256_storeu_pd(&c[k], tr);
    _mm256_storeu_pd(&s[k], _mm256_sqrt_pd(ss));
  }
  scalar::angle_terms(a.subspan(k), b.subspan(k), c.subspan(k), s.subspan(k));
}

ROTKIT_AVX2 void left_multiply(const Matrix3& m, std::span<const Matrix3> in,
                               std::span<Matrix3> out) noexcept {
  const std::size_t n = out.size();
  __m256d mb[9];
  for (std::size_t e = 0; e < 9; ++e) mb[e] = _mm256_set1_pd(m.m[e]);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256d r[9];
    load_lanes(&in[k], r);
    __m256d o[9];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        __m256d s = _mm256_mul_pd(mb[3 * i + 0], r[0 + j]);
        s = _mm256_add_pd(s, _mm256_mul_pd(mb[3 * i + 1], r[3 + j]));
        s = _mm256_add_pd(s, _mm256_mul_pd(mb[3 * i + 2], r[6 + j]));
        o[3 * i + j] = s;
      }
    }
    store_lanes(o, &out[k]);
  }
  scalar::left_multiply(m, in.subspan(k), out.subspan(k));
}

ROTKIT_AVX2 void right_multiply(std::span<const Matrix3> in, const Matrix3& m,
                                std::span<Matrix3> out) noexcept {
  const std::size_t n = out.size();
  __m256d mb[9];
  for (std::size_t e = 0; e < 9; ++e) mb[e] = _mm256_set1_pd(m.m[e]);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256d r[9];
    load_lanes(&in[k], r);
    __m256d o[9];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        __m256d s = _mm256_mul_pd(r[3 * i + 0], mb[0 + j]);
        s = _mm256_add_pd(s, _mm256_mul_pd(r[3 * i + 1], mb[3 + j]));
        s = _mm256_add_pd(s, _mm256_mul_pd(r[3 * i + 2], mb[6 + j]));
        o[3 * i + j] = s;
      }
    }
    store_lanes(o, &out[k]);
  }
  scalar::right_multiply(in.subspan(k), m, out.subspan(k));
}

ROTKIT_AVX2 void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) noexcept {
  // Lanes run along a row of the 9x9 output: columns 0-3, 4-7, then 8 alone.
  double* o = out.data();
  const __m256d mean_lo = _mm256_loadu_pd(&mean[0]);
  const __m256d mean_hi = _mm256_loadu_pd(&mean[4]);
  for (const Vec9& x : v) {
    const __m256d d_lo = _mm256_sub_pd(_mm256_loadu_pd(&x[0]), mean_lo);
    const __m256d d_hi = _mm256_sub_pd(_mm256_loadu_pd(&x[4]), mean_hi);
    alignas(32) double d[9];
    _mm256_store_pd(&d[0], d_lo);
    _mm256_store_pd(&d[4], d_hi);
    d[8] = x[8] - mean[8];
    for (std::size_t i = 0; i < 9; ++i) {
      const __m256d di = _mm256_set1_pd(d[i]);
      double* row = o + 9 * i;
      _mm256_storeu_pd(row, _mm256_add_pd(_mm256_loadu_pd(row), _mm256_mul_pd(di, d_lo)));
      _mm256_storeu_pd(row + 4, _mm256_add_pd(_mm256_loadu_pd(row + 4), _mm256_mul_pd(di, d_hi)));
      row[8] = row[8] + d[i] * d[8];
    }
  }
}

}  // namespace rotkit::kernels::avx2

#endif
