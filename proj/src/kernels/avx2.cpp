// Compiled with -mavx2; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "fatpoints/kernels.hpp"

namespace fatpoints::kernels::avx2 {

namespace {

const __m256i kP = _mm256_set1_epi64x(static_cast<long long>(kMersenne61));
const __m256i kLow29 = _mm256_set1_epi64x((1LL << 29) - 1);

// a, c < 2^61. Splits both into 32-bit halves:
//   a*c = hh*2^64 + (lh + hl)*2^32 + ll
// and folds with 2^61 = 1: 2^64 = 8, mid*2^32 = (mid >> 29) + (mid mod 2^29)*2^32.
// The folded sum stays below 2^63, so signed compares are safe.
inline __m256i mulmod(__m256i a, __m256i c, __m256i c_hi) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i ll = _mm256_mul_epu32(a, c);
  __m256i lh = _mm256_mul_epu32(a, c_hi);
  __m256i hl = _mm256_mul_epu32(a_hi, c);
  __m256i hh = _mm256_mul_epu32(a_hi, c_hi);
  __m256i mid = _mm256_add_epi64(lh, hl);

  __m256i r = _mm256_slli_epi64(hh, 3);
  r = _mm256_add_epi64(r, _mm256_srli_epi64(mid, 29));
  r = _mm256_add_epi64(r, _mm256_slli_epi64(_mm256_and_si256(mid, kLow29), 32));
  r = _mm256_add_epi64(r, _mm256_srli_epi64(ll, 61));
  r = _mm256_add_epi64(r, _mm256_and_si256(ll, kP));

  r = _mm256_add_epi64(_mm256_and_si256(r, kP), _mm256_srli_epi64(r, 61));
  __m256i ge = _mm256_cmpgt_epi64(r, _mm256_sub_epi64(kP, _mm256_set1_epi64x(1)));
  return _mm256_sub_epi64(r, _mm256_and_si256(ge, kP));
}

inline std::uint64_t mulmod_scalar(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t s = (static_cast<std::uint64_t>(prod) & kMersenne61) + static_cast<std::uint64_t>(prod >> 61);
  s = (s & kMersenne61) + (s >> 61);
  return s >= kMersenne61 ? s - kMersenne61 : s;
}

}  // namespace

void submul_m61(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n) noexcept {
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i vc_hi = _mm256_srli_epi64(vc, 32);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i prod = mulmod(s, vc, vc_hi);
    __m256i diff = _mm256_sub_epi64(d, prod);
    __m256i borrow = _mm256_cmpgt_epi64(prod, d);
    diff = _mm256_add_epi64(diff, _mm256_and_si256(borrow, kP));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), diff);
  }
  for (; i < n; ++i) {
    std::uint64_t prod = mulmod_scalar(c, src[i]);
    dst[i] = dst[i] >= prod ? dst[i] - prod : dst[i] + kMersenne61 - prod;
  }
}

void scale_m61(std::uint64_t* v, std::uint64_t c, std::size_t n) noexcept {
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i vc_hi = _mm256_srli_epi64(vc, 32);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), mulmod(a, vc, vc_hi));
  }
  for (; i < n; ++i) v[i] = mulmod_scalar(c, v[i]);
}

}  // namespace fatpoints::kernels::avx2
