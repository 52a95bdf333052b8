#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fatpoints/errors.hpp"
#include "fatpoints/kernels.hpp"

namespace fatpoints::kernels {

namespace {

// -1 = environment not read yet, 0 = automatic, 1 = scalar, 2 = avx2
std::atomic<int> g_forced{-1};

int initial_force() noexcept {
  const char* env = std::getenv("FATPOINTS_KERNEL");
  if (env && std::strcmp(env, "scalar") == 0) return 1;
  return 0;
}

int forced() noexcept {
  int f = g_forced.load(std::memory_order_relaxed);
  if (f < 0) {
    f = initial_force();
    g_forced.store(f, std::memory_order_relaxed);
  }
  return f;
}

bool cpu_has_avx2() noexcept {
#if defined(FATPOINTS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() noexcept { return cpu_has_avx2(); }

void force_isa(std::optional<Isa> isa) noexcept {
  if (!isa) {
    g_forced.store(0, std::memory_order_relaxed);
  } else {
    g_forced.store(*isa == Isa::scalar ? 1 : 2, std::memory_order_relaxed);
  }
}

Isa selected_isa(const PrimeField& field) noexcept {
  if (!field.is_mersenne61() || !cpu_has_avx2()) return Isa::scalar;
  return forced() == 1 ? Isa::scalar : Isa::avx2;
}

void submul(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
            const PrimeField& field) {
  if (src.size() < dst.size()) throw InternalError("submul: source shorter than destination");
  if (c == 0) return;
#if defined(FATPOINTS_HAVE_AVX2)
  if (selected_isa(field) == Isa::avx2) {
    avx2::submul_m61(dst.data(), src.data(), c, dst.size());
    return;
  }
#endif
  scalar::submul(dst.data(), src.data(), c, dst.size(), field);
}

void scale(std::span<std::uint64_t> v, std::uint64_t c, const PrimeField& field) {
#if defined(FATPOINTS_HAVE_AVX2)
  if (selected_isa(field) == Isa::avx2) {
    avx2::scale_m61(v.data(), c, v.size());
    return;
  }
#endif
  scalar::scale(v.data(), c, v.size(), field);
}

}  // namespace fatpoints::kernels
