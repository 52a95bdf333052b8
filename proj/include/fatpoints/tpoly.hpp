#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fatpoints/field.hpp"

namespace fatpoints {

/// Polynomial in the deformation parameter t over F_p, lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(std::vector<std::uint64_t> coeffs);
  TPolynomial(std::initializer_list<std::uint64_t> coeffs);

  static TPolynomial constant(std::uint64_t c) { return TPolynomial({c}); }
  /// c * t^k
  static TPolynomial monomial(std::uint64_t c, int k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest k with t^k dividing this; -1 for zero.
  int valuation() const noexcept;
  std::uint64_t coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

  std::uint64_t eval(std::uint64_t tau, const PrimeField& f) const noexcept;
  std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  bool operator==(const TPolynomial&) const = default;

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

TPolynomial add(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
TPolynomial sub(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
TPolynomial mul(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
TPolynomial scale(const TPolynomial& a, std::uint64_t c, const PrimeField& f);
/// Divides by t^k; the low coefficients must vanish.
TPolynomial shift_down(const TPolynomial& a, int k);

struct DivRem {
  TPolynomial quotient;
  TPolynomial remainder;
};
/// Throws InvalidInput when b is zero.
DivRem divrem(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
/// Exact division; throws InternalError when b does not divide a.
TPolynomial exact_div(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
/// Monic gcd; gcd(0, 0) = 0.
TPolynomial gcd(const TPolynomial& a, const TPolynomial& b, const PrimeField& f);
TPolynomial make_monic(const TPolynomial& a, const PrimeField& f);

}  // namespace fatpoints
