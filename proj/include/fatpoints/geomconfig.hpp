#pragma once

// Projected-pair configurations and the lifting of pairwise projection data.
//
// The hyperplane R is {x_last = 0}. A point of P^n is a vector of n+1
// coordinates; points of R are written either with their last coordinate 0
// or, for ProjectedConfig::b, in the n coordinates of R itself.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/field.hpp"
#include "fatpoints/linsys.hpp"

namespace fatpoints {

using ProjPoint = std::vector<std::uint64_t>;

struct ProjectedConfig {
  int n = 0;
  std::vector<ProjPoint> a;                  // n+1 coordinates, last = 1
  std::vector<ProjPoint> b;                  // p_ij = <a_i, a_j> cap R, n coordinates
  std::vector<std::pair<int, int>> pairs;    // (i, j) of each b, 0-based, i < j
};

ProjectedConfig build_projected_config(int n, int l, const PrimeField& field, std::uint64_t seed);

/// Rank of B evaluated on degree-e forms of R (C(n-1+e, n-1) columns).
std::size_t conditions_rank(const ProjectedConfig& cfg, int e, const PrimeField& field);

/// min{t >= 2 : C(t+3,3)/(t+1) - t > k}
int n_k_threshold(int k);

struct ConjectureReport {
  int n = 0;
  int k = 0;
  long expected = 0;  // C(n+k,2) - C(k-1,2)
  long measured = 0;
  bool in_range = false;  // 0 <= k < C(n+3,3)/(n+1) - n
  bool pass = false;      // measured == expected
  std::vector<std::string> warnings;
};

/// Rank of n+k projected points on cubics against the conjectured count.
/// Refuses (InvalidInput) when the expected count exceeds the number of cubics.
ConjectureReport verify_conjecture_nk(int n, int k, const MonteCarlo& mc);

/// Points x_ij of P^n, 1 <= i < j <= t, with x_bc on the line <x_ab, x_ac>.
struct WConfig {
  int n = 0;
  int t = 0;
  std::vector<ProjPoint> x;  // pair (i,j) at pair_index(i,j)
  std::size_t scalars_drawn = 0;

  std::size_t pair_index(int i, int j) const;  // 1-based, i < j
  const ProjPoint& at(int i, int j) const { return x[pair_index(i, j)]; }
  ProjPoint& at(int i, int j) { return x[pair_index(i, j)]; }
};

/// Draws exactly n(t-1) + t - 2 random scalars; requires n >= 2, t >= 3.
WConfig sample_W(int n, int t, const PrimeField& field, std::uint64_t seed);

/// Whether x_bc lies on <x_ab, x_ac> for every a < b < c.
bool collinearity_holds(const WConfig& w, const PrimeField& field);

/// Points p_1..p_t of P^{n+1} (n+2 coordinates, last = 1) whose joins meet
/// R in the x_ij. Throws InvalidInput("configuration not general") when a
/// required span has the wrong dimension.
std::vector<ProjPoint> lift_preimage(const WConfig& w, const PrimeField& field, std::uint64_t seed);

struct LiftCheck {
  bool ok = false;
  std::string diagnostic;
};

/// <p_i, p_j> cap R == x_ij for all i < j.
LiftCheck verify_lift(const std::vector<ProjPoint>& points, const WConfig& w, const PrimeField& field);

}  // namespace fatpoints
