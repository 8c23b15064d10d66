#include <atomic>
#include <string>

#include "rotkit/errors.hpp"
#include "rotkit/kernels.hpp"

namespace rotkit::kernels {

namespace {

struct KernelTable {
  void (*angle_terms)(std::span<const Matrix3>, std::span<const Matrix3>, std::span<double>,
                      std::span<double>) noexcept;
  void (*left_multiply)(const Matrix3&, std::span<const Matrix3>, std::span<Matrix3>) noexcept;
  void (*right_multiply)(std::span<const Matrix3>, const Matrix3&, std::span<Matrix3>) noexcept;
  void (*scatter9)(std::span<const Vec9>, const Vec9&, Mat9&) noexcept;
};

constexpr KernelTable kScalarTable{&scalar::angle_terms, &scalar::left_multiply,
                                   &scalar::right_multiply, &scalar::scatter9};
#if defined(ROTKIT_HAVE_AVX2_VARIANT)
constexpr KernelTable kAvx2Table{&avx2::angle_terms, &avx2::left_multiply,
                                 &avx2::right_multiply, &avx2::scatter9};
#endif
#if defined(ROTKIT_HAVE_NEON_VARIANT)
constexpr KernelTable kNeonTable{&neon::angle_terms, &neon::left_multiply,
                                 &neon::right_multiply, &neon::scatter9};
#endif

const KernelTable& table_for(Isa isa) noexcept {
  switch (isa) {
#if defined(ROTKIT_HAVE_AVX2_VARIANT)
    case Isa::avx2:
      return kAvx2Table;
#endif
#if defined(ROTKIT_HAVE_NEON_VARIANT)
    case Isa::neon:
      return kNeonTable;
#endif
    default:
      return kScalarTable;
  }
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

const KernelTable& current() noexcept { return table_for(active().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(ROTKIT_HAVE_AVX2_VARIANT) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(ROTKIT_HAVE_NEON_VARIANT)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  static const Isa isa = [] {
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa))
    throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) + "' not supported here");
  active().store(isa, std::memory_order_relaxed);
}

void reset_isa() noexcept { active().store(detected_isa(), std::memory_order_relaxed); }

void angle_terms(std::span<const Matrix3> a, std::span<const Matrix3> b, std::span<double> c,
                 std::span<double> s) {
  if (a.size() != c.size() || b.size() != c.size() || s.size() != c.size())
    throw InvalidArgument("angle_terms: span sizes differ");
  current().angle_terms(a, b, c, s);
}

void left_multiply(const Matrix3& m, std::span<const Matrix3> in, std::span<Matrix3> out) {
  if (in.size() != out.size()) throw InvalidArgument("left_multiply: span sizes differ");
  current().left_multiply(m, in, out);
}

void right_multiply(std::span<const Matrix3> in, const Matrix3& m, std::span<Matrix3> out) {
  if (in.size() != out.size()) throw InvalidArgument("right_multiply: span sizes differ");
  current().right_multiply(in, m, out);
}

void scatter9(std::span<const Vec9> v, const Vec9& mean, Mat9& out) {
  current().scatter9(v, mean, out);
}

}  // namespace rotkit::kernels
