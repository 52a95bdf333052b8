#pragma once

// Standard Cremona transformations of linear systems on P^3.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fatpoints/linsys.hpp"

namespace fatpoints {

struct P3System {
  int d = 0;
  std::vector<int> mults;  // zeros allowed between steps

  static P3System from_spec(const SystemSpec& s);
  SystemSpec to_spec() const;  // drops zeros
  P3System pruned() const;
  bool operator==(const P3System&) const = default;
};

std::string to_string(const P3System& s);

struct CremonaStep {
  P3System system;  // multiplicities keep their positions; zeros not pruned
  int k = 0;        // 2d - sum of the four base multiplicities
  bool clamped = false;  // a multiplicity went negative and was set to 0
};

/// d' = d + k, m'_b = m_b + k on the four base indices (0-based).
CremonaStep cremona_step(const P3System& s, const std::array<std::size_t, 4>& base);

struct CremonaChain {
  std::vector<P3System> states;  // input first, pruned states after each step
  std::vector<CremonaStep> steps;
  P3System reduced;
  bool clamped = false;
};

/// Steps on the four largest multiplicities while k < 0 and at least four
/// positive multiplicities remain.
CremonaChain cremona_reduce(const P3System& s);

}  // namespace fatpoints
