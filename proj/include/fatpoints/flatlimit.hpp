#pragma once

// Flat limits of colliding fat points, measured degree by degree.
//
// The degree <= d piece of the ideal of Z_t is the kernel of the stacked
// moving conditions. Its limit at t = 0 is the annihilator of the limit of
// the row space, which is computed by t-adic saturation of a set of rows
// independent over F_p(t). The kernel route (kernel over F_p(t), then
// saturation of the kernel vectors) is kept as a cross-check.

#include <cstdint>
#include <optional>
#include <vector>

#include "fatpoints/collision.hpp"
#include "fatpoints/conditions.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

/// Points of multiplicity m_i moving along sigma_i(t), all sigma_i(0) = 0.
struct CollisionFamily {
  int n = 2;
  int jet_degree = 2;
  std::vector<int> mults;
  std::vector<std::vector<TPolynomial>> sections;

  long total_degree() const { return CollisionSpec{n, mults}.total_degree(); }
};

/// Sections with random coefficients in t-degrees 1..jet_degree.
CollisionFamily make_family(const CollisionSpec& spec, int jet_degree, const PrimeField& field, std::uint64_t seed);

/// Degree <= d piece of the limit ideal.
struct LimitPiece {
  int degree = 0;
  std::size_t rank = 0;            // rank of the conditions over F_p(t)
  MatrixF limit_rows;              // limit of the condition row space
  std::vector<VectorF> basis;      // piece = kernel of limit_rows
  int min_order = -1;              // smallest order at the origin in the piece, -1 if zero
  std::size_t divisions = 0;       // divisions by t spent in the saturation
};

/// Pieces for d = 0..D, by row-space saturation.
std::vector<LimitPiece> limit_pieces(const CollisionFamily& f, int D, const PrimeField& field, std::uint64_t seed);

/// Piece d by the kernel route; throws DegreeCapExceeded past `degree_cap`.
LimitPiece limit_piece_via_kernel(const CollisionFamily& f, int d, const PrimeField& field, int degree_cap);

/// Colength of the conditions of Z_tau at a random tau, d = 0..D.
std::vector<long> generic_hilbert(const CollisionFamily& f, int D, const PrimeField& field, std::uint64_t seed);

/// One more than the first degree where the generic Hilbert function
/// reaches the total degree.
int auto_degree(const CollisionFamily& f, const PrimeField& field, std::uint64_t seed);

enum class Comparison { equal, candidate_strictly_contained, incomparable, not_checked };
const char* to_string(Comparison c) noexcept;

struct LimitReport {
  int D = 0;
  std::vector<long> hilbert;
  long degree = 0;
  int multiplicity = 0;
  std::vector<LimitPiece> pieces;
  Comparison comparison = Comparison::not_checked;
};

/// D = nullopt picks auto_degree. Throws NotStabilized when h(D-1) != h(D)
/// and CheckFailure when h(D) differs from the total degree.
LimitReport limit_hilbert(const CollisionFamily& f, std::optional<int> D, const PrimeField& field,
                          std::uint64_t seed);

/// Checks piece_d(limit) inside piece_d(candidate) for every d <= D.
Comparison compare_with_candidate(const LimitReport& report, const CandidateScheme& c, int n, const PrimeField& field);

/// sigma_i'(0) - sigma_j'(0) for i < j.
std::vector<std::vector<std::uint64_t>> tangent_directions(const CollisionFamily& f, const PrimeField& field);

/// Lines along the tangent directions with jets of the given order.
CandidateScheme tangent_candidate(const CollisionFamily& f, const PrimeField& field, int jet_order = 4);

}  // namespace fatpoints
