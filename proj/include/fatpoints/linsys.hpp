#pragma once

// Dimensions of linear systems with assigned fat base points.
//
// Measured dimensions are Monte Carlo: the base points are drawn at random
// over F_p, once per seed, and every seed must give the same rank.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/conditions.hpp"
#include "fatpoints/field.hpp"

namespace fatpoints {

/// L_{n,d}(m_1,...,m_r) on P^n, or the bidegree (a,b) system on P^1 x P^1.
struct SystemSpec {
  bool p1p1 = false;
  int n = 2;  // projective dimension (2 for P^1 x P^1)
  int d = 0;  // degree; a + b on P^1 x P^1
  int a = 0;
  int b = 0;
  std::vector<int> mults;  // descending, all positive

  static SystemSpec projective(int n, int d, std::vector<int> mults);
  static SystemSpec bidegree(int a, int b, std::vector<int> mults);

  MonomialBasis basis() const;
  long ambient_dim() const;

  bool operator==(const SystemSpec&) const = default;
};

/// "L(3,7;4^6)" or "Q(3,3;2)"; runs of equal multiplicities are written m^e.
std::string to_string(const SystemSpec& spec);
/// Inverse of to_string; accepts whitespace and unsorted or repeated entries.
/// Throws ParseError with the offending column (1-based).
SystemSpec parse_system(std::string_view text);

inline const std::vector<std::uint64_t> kDefaultSeeds = {0x5eed0001ULL, 0x5eed0002ULL, 0x5eed0003ULL};

/// Field and seeds for randomized measurements; one trial per seed.
struct MonteCarlo {
  PrimeField field{};
  std::vector<std::uint64_t> seeds = kDefaultSeeds;
};

struct DimReport {
  long measured_dim = 0;
  long vdim = 0;
  long edim = 0;
  bool special = false;
  int trials = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> seeds;
};

long vdim(const SystemSpec& spec);
long edim(const SystemSpec& spec);

/// Throws NumericalAbort when the trials disagree, ConfigError when p <= d.
DimReport generic_dim(const SystemSpec& spec, const MonteCarlo& mc);

/// Rank of the stacked conditions of one random configuration.
long conditions_rank_once(const SystemSpec& spec, const PrimeField& field, std::uint64_t seed);

enum class AhVerdict { special, non_special, out_of_scope };
const char* to_string(AhVerdict v) noexcept;

/// Double points: special iff d = 2 and 2 <= h <= n, or (n,d,h) is one of
/// (2,4,5), (3,4,9), (4,3,7), (4,4,14). Degrees d < 2 are out of scope.
AhVerdict ah_oracle(int n, int d, int h);

/// Smallest j >= max(m_i) with dim L_{n,j}(m) > 0.
int min_nonzero_degree(int n, const std::vector<int>& mults, const MonteCarlo& mc);

/// The bidegree (a,b) system with one m-fold point corresponds to L_{2,a+b}(a,b,m).
SystemSpec p1p1_to_p2(int a, int b, int m);

/// (d+1)^2 > 9 C(m+1,2) and d >= 2m-1.
bool lu_predicate(long d, long m);

}  // namespace fatpoints
