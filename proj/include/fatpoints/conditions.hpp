#pragma once

// Linear conditions on coefficient vectors of polynomials.
//
// Polynomials are stored by their coefficients on a MonomialBasis. Projective
// systems of degree d are handled in the affine chart {x_0 = 1}, so both the
// affine and projective bases are the monomials of degree <= d in n
// variables. Monomials are ordered by total degree, then lexicographically
// with x_1 > x_2 > ...; the degree <= d basis is a prefix of the degree <= D
// basis for d <= D.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fatpoints/field.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

using Exponent = std::vector<int>;

enum class Ambient { affine, projective, biprojective };

class MonomialBasis {
 public:
  static MonomialBasis affine(int n, int d);
  static MonomialBasis projective(int n, int d);
  /// Bidegree (a, b) on P^1 x P^1 in the chart x^i y^j; index i*(b+1)+j.
  static MonomialBasis biprojective(int a, int b);

  Ambient ambient() const noexcept { return ambient_; }
  /// Number of affine variables (n, or 2 for P^1 x P^1).
  int variables() const noexcept { return vars_; }
  /// Largest total degree of a basis monomial.
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exps_.size(); }
  const Exponent& operator[](std::size_t i) const noexcept { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  /// Number of monomials of degree <= d (affine/projective only).
  std::size_t prefix_size(int d) const;
  /// Position of an exponent; throws InvalidInput if absent.
  std::size_t index_of(const Exponent& e) const;

 private:
  Ambient ambient_ = Ambient::affine;
  int vars_ = 0;
  int degree_ = 0;
  std::vector<Exponent> exps_;
  std::map<Exponent, std::size_t> index_;
};

/// Exponents of degree <= d in n variables in basis order.
std::vector<Exponent> monomials_up_to(int n, int d);

std::uint64_t binomial(int n, int k);

/// Point in affine coordinates (the chart for projective and P^1 x P^1 ambients).
struct FatPoint {
  std::vector<std::uint64_t> coords;
  int multiplicity = 1;
};

/// Line through the origin; direction normalized so its first nonzero entry is 1.
class OriginLine {
 public:
  /// Throws InvalidInput for the zero vector.
  OriginLine(std::vector<std::uint64_t> direction, const PrimeField& field);
  const std::vector<std::uint64_t>& direction() const noexcept { return dir_; }
  bool operator==(const OriginLine&) const = default;

 private:
  std::vector<std::uint64_t> dir_;
};

/// C(m-1+n, n) rows annihilating exactly the polynomials of order >= m at q.
/// Row alpha extracts the coefficient of (x-q)^alpha.
MatrixF fat_point_rows(const FatPoint& q, const MonomialBasis& basis, const PrimeField& field);

/// s rows; row k extracts the s^k coefficient of f(s * direction).
MatrixF line_jet_rows(const OriginLine& line, int s, const MonomialBasis& basis, const PrimeField& field);

/// fat_point_rows at the moving point sigma(t); every sigma_i(0) must vanish.
MatrixT moving_fat_point_rows(const std::vector<TPolynomial>& sigma, int m, const MonomialBasis& basis,
                              const PrimeField& field);

/// Evaluation of the degree-k forms in len(points[i]) variables at each
/// point; columns are the degree-k monomials in basis order.
MatrixF form_evaluation_rows(const std::vector<std::vector<std::uint64_t>>& points, int k, const PrimeField& field);

/// Order of vanishing at the origin of the polynomial with these coefficients
/// (-1 for the zero polynomial).
int origin_order(std::span<const std::uint64_t> coeffs, const MonomialBasis& basis);

}  // namespace fatpoints
