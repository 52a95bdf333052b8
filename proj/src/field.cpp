#include "fatpoints/field.hpp"

#include <string>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover every 64-bit integer.
bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63)) throw ConfigError("prime must be below 2^63");
  if (!is_prime_u64(p)) throw ConfigError(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t r = 1 % p_;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw InvalidInput("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  // |v| = -(v + 1) + 1 avoids overflow at INT64_MIN
  std::uint64_t magnitude = add(static_cast<std::uint64_t>(-(v + 1)) % p_, 1 % p_);
  return neg(magnitude);
}

void PrimeField::require_exceeds(long degree, std::string_view context) const {
  if (degree >= 0 && static_cast<std::uint64_t>(degree) >= p_) {
    throw ConfigError("prime " + std::to_string(p_) + " must exceed degree " + std::to_string(degree) +
                      " (" + std::string(context) + ")");
  }
}

}  // namespace fatpoints
