#include "fatpoints/tpoly.hpp"

#include <algorithm>

#include "fatpoints/errors.hpp"

namespace fatpoints {

TPolynomial::TPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPolynomial::TPolynomial(std::initializer_list<std::uint64_t> coeffs) : coeffs_(coeffs) { trim(); }

TPolynomial TPolynomial::monomial(std::uint64_t c, int k) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return TPolynomial(std::move(v));
}

void TPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int TPolynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

std::uint64_t TPolynomial::eval(std::uint64_t tau, const PrimeField& f) const noexcept {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, tau), *it);
  return acc;
}

TPolynomial add(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.add(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
  return TPolynomial(std::move(r));
}

TPolynomial sub(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.sub(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
  return TPolynomial(std::move(r));
}

TPolynomial mul(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<std::uint64_t> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
  }
  return TPolynomial(std::move(r));
}

TPolynomial scale(const TPolynomial& a, std::uint64_t c, const PrimeField& f) {
  std::vector<std::uint64_t> r(a.coeffs());
  for (auto& v : r) v = f.mul(v, c);
  return TPolynomial(std::move(r));
}

TPolynomial shift_down(const TPolynomial& a, int k) {
  if (k <= 0 || a.is_zero()) return a;
  const auto& c = a.coeffs();
  for (int i = 0; i < k && i < static_cast<int>(c.size()); ++i) {
    if (c[i] != 0) throw InternalError("shift_down: polynomial not divisible by t^k");
  }
  if (k >= static_cast<int>(c.size())) return {};
  return TPolynomial(std::vector<std::uint64_t>(c.begin() + k, c.end()));
}

DivRem divrem(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<std::uint64_t> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {TPolynomial{}, a};
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  std::uint64_t lead_inv = f.inv(b.leading());
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    std::uint64_t c = rem[k];
    if (c == 0) continue;
    std::uint64_t q = f.mul(c, lead_inv);
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(q, bc[j]));
  }
  return {TPolynomial(std::move(quot)), TPolynomial(std::move(rem))};
}

TPolynomial exact_div(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  auto [q, r] = divrem(a, b, f);
  if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
  return q;
}

TPolynomial make_monic(const TPolynomial& a, const PrimeField& f) {
  if (a.is_zero()) return a;
  return scale(a, f.inv(a.leading()), f);
}

TPolynomial gcd(const TPolynomial& a, const TPolynomial& b, const PrimeField& f) {
  TPolynomial x = a, y = b;
  while (!y.is_zero()) {
    TPolynomial r = divrem(x, y, f).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x, f);
}

}  // namespace fatpoints
