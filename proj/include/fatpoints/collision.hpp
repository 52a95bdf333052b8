#pragma once

// Predictions for the limit of colliding fat points: multiplicity, the
// rule-based description of the limit scheme, and candidate schemes built
// from curvilinear jets along lines through the origin.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fatpoints/conditions.hpp"
#include "fatpoints/linsys.hpp"

namespace fatpoints {

struct CollisionSpec {
  int n = 2;
  std::vector<int> mults;

  /// Sum of C(m_i+n-1, n): degree of every fibre of the family.
  long total_degree() const;
};

enum class LineConfig { general, projected_pairs };

/// Union of the jets of order s_i along lines l_i through the origin.
struct CandidateScheme {
  std::vector<OriginLine> lines;
  std::vector<int> jet_orders;
  LineConfig config = LineConfig::general;
  int pairs_of = 0;  // m for projected-pairs(m)
};

/// Directions v_i - v_j for i < j (lexicographic pair order).
std::vector<std::vector<std::uint64_t>> pair_directions(const std::vector<std::vector<std::uint64_t>>& v,
                                                        const PrimeField& field);

/// t random lines with jet order s.
CandidateScheme general_candidate(int n, int t, int s, const PrimeField& field, std::mt19937_64& rng);
/// The C(m,2) directions v_i - v_j of m random points in A^n, jet order s.
CandidateScheme projected_pairs_candidate(int n, int m, int s, const PrimeField& field, std::mt19937_64& rng);

enum class DescriptionKind { m_tuple_point, triple_with_directions, fat_plus_simple_directions, unclassified };
const char* to_string(DescriptionKind k) noexcept;

struct LimitDescription {
  DescriptionKind kind = DescriptionKind::unclassified;
  int m = 0;         // multiplicity of the fat point in the description
  int t = 0;         // number of infinitely near directions
  int pairs_of = 0;  // for projected-pairs(q) directions
};

/// Human readable form, e.g. "MTuplePoint(4)".
std::string to_string(const LimitDescription& d);

struct LimitPrediction {
  int multiplicity = 0;
  long degree = 0;
  LimitDescription description;
  std::string citation;  // id of the rule that fired
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

/// Sum of m_i on A^1, otherwise min_nonzero_degree.
int limit_multiplicity(const CollisionSpec& spec, const MonteCarlo& mc);

/// First matching rule wins; numerical hypotheses are checked with mc.
LimitPrediction classify_limit(const CollisionSpec& spec, const MonteCarlo& mc);

struct CandidateHilbert {
  std::vector<long> hilbert;  // colength in degree <= d, d = 0..D
  long degree = 0;
  int multiplicity = 0;
  int stabilized_at = 0;
};

/// Throws NotStabilized ("raise D") when h(D-1) != h(D).
CandidateHilbert candidate_hilbert(const CandidateScheme& c, int n, int D, const PrimeField& field);

struct RecursiveDegree {
  long degree = 0;
  int multiplicity = 0;
  std::vector<int> multiplicity_path;  // multiplicity of Z_{n,1}, ..., Z_{n,t}
  std::vector<long> degree_path;
};

/// deg(1) = 4, deg(s+1) = deg(s) + 4 - mult(s), mult(s) = min(4, min{m : C(n-1+m, n-1) > s}).
RecursiveDegree candidate_degree_recursive(int n, int t);

struct DegreeMult {
  long degree = 0;
  int multiplicity = 0;
};

/// Degree and multiplicity of the projected-pairs(m) candidate with jets of
/// order 4, where a closed form is known. The n+k branch assumes the
/// conjectured rank C(n+k,2) - C(k-1,2) on cubics.
std::optional<DegreeMult> projected_pairs_degree(int n, int m);

/// C(n+m, n) - h0_B.
long infinitely_near_degree(int n, int m, long h0_B);

/// Whether 1 <= k and 6k < n^2 - n + 6 and (n,k) != (4,3).
bool n_plus_k_in_range(int n, int k);

struct Degeneration {
  SystemSpec result;
  LimitPrediction prediction;
  std::vector<std::string> warnings;
};

/// Replaces the points with multiplicities `subset` (a sub-multiset of
/// spec.mults) by their predicted limit. Refuses (InvalidInput) when the
/// limit is not a fat point, possibly with simple directions.
Degeneration apply_collision_degeneration(const SystemSpec& spec, const std::vector<int>& subset,
                                          const MonteCarlo& mc);

}  // namespace fatpoints
