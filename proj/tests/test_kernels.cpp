#include <random>
#include <vector>

#include "doctest.h"
#include "fatpoints/kernels.hpp"

using namespace fatpoints;

namespace {

std::vector<std::uint64_t> random_vec(std::size_t n, const PrimeField& f, std::mt19937_64& rng) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = f.random(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar submul and scale agree with field arithmetic") {
  for (std::uint64_t p : {kMersenne61, std::uint64_t{1000000007}, std::uint64_t{101}}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    auto dst = random_vec(37, f, rng), src = random_vec(37, f, rng);
    auto c = f.random(rng);
    auto want = dst;
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = f.sub(want[i], f.mul(c, src[i]));
    kernels::scalar::submul(dst.data(), src.data(), c, dst.size(), f);
    CHECK(dst == want);
    for (auto& x : want) x = f.mul(x, c);
    kernels::scalar::scale(dst.data(), c, dst.size(), f);
    CHECK(dst == want);
  }
}

TEST_CASE("AVX2 kernels are bit-identical to scalar ones") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  PrimeField f;
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1001u}) {
    auto dst = random_vec(n, f, rng), src = random_vec(n, f, rng);
    // edge residues
    if (n > 2) {
      dst[0] = kMersenne61 - 1;
      src[0] = kMersenne61 - 1;
      dst[1] = 0;
    }
    for (std::uint64_t c : {std::uint64_t{0}, std::uint64_t{1}, kMersenne61 - 1, f.random(rng)}) {
      auto a = dst, b = dst;
      kernels::scalar::submul(a.data(), src.data(), c, n, f);
      kernels::avx2::submul_m61(b.data(), src.data(), c, n);
      CHECK(a == b);
      kernels::scalar::scale(a.data(), c, n, f);
      kernels::avx2::scale_m61(b.data(), c, n);
      CHECK(a == b);
    }
  }
}

TEST_CASE("dispatch honours force_isa") {
  PrimeField f;
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(kernels::selected_isa(f) == kernels::Isa::scalar);
  std::mt19937_64 rng(3);
  auto dst = random_vec(99, f, rng), src = random_vec(99, f, rng);
  auto a = dst;
  kernels::submul(a, src, 12345, f);
  kernels::force_isa(std::nullopt);
  auto b = dst;
  kernels::submul(b, src, 12345, f);
  CHECK(a == b);
  if (kernels::avx2_available()) CHECK(kernels::selected_isa(f) == kernels::Isa::avx2);
  CHECK(kernels::selected_isa(PrimeField(101)) == kernels::Isa::scalar);
}
