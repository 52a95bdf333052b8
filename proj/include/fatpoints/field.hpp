#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fatpoints {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Arithmetic in F_p for a word-size prime p < 2^63.
///
/// Elements are plain std::uint64_t residues in [0, p). The Mersenne prime
/// 2^61 - 1 gets a shift-and-add reduction; any other prime falls back to a
/// 128-bit remainder.
class PrimeField {
 public:
  /// Throws ConfigError unless p is a prime below 2^63.
  explicit PrimeField(std::uint64_t p = kMersenne61);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_mersenne61() const noexcept { return p_ == kMersenne61; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (is_mersenne61()) {
      std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      s = (s & kMersenne61) + (s >> 61);
      return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    return static_cast<std::uint64_t>(prod % p_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  /// Throws InvalidInput on zero.
  std::uint64_t inv(std::uint64_t a) const;

  /// Residue of a signed integer.
  std::uint64_t from_int(std::int64_t v) const noexcept;

  /// Uniform residue in [0, p).
  template <class Rng>
  std::uint64_t random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
    return dist(rng);
  }
  /// Uniform nonzero residue.
  template <class Rng>
  std::uint64_t random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
    return dist(rng);
  }

  /// Coefficient extraction for multiplicity conditions needs char F_p > degree.
  void require_exceeds(long degree, std::string_view context) const;

 private:
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n) noexcept;

}  // namespace fatpoints
