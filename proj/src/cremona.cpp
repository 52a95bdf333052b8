#include "fatpoints/cremona.hpp"

#include <algorithm>
#include <functional>

#include "fatpoints/errors.hpp"

namespace fatpoints {

P3System P3System::from_spec(const SystemSpec& s) {
  if (s.p1p1 || s.n != 3) throw InvalidInput("Cremona transformations need a system on P^3");
  return {s.d, s.mults};
}

SystemSpec P3System::to_spec() const {
  if (d < 0) throw InvalidInput("negative degree");
  return SystemSpec::projective(3, d, pruned().mults);
}

P3System P3System::pruned() const {
  P3System p{d, {}};
  for (int m : mults)
    if (m != 0) p.mults.push_back(m);
  return p;
}

std::string to_string(const P3System& s) {
  std::string out = "(" + std::to_string(s.d) + ",[";
  for (std::size_t i = 0; i < s.mults.size(); ++i) out += (i ? "," : "") + std::to_string(s.mults[i]);
  return out + "])";
}

CremonaStep cremona_step(const P3System& s, const std::array<std::size_t, 4>& base) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (base[i] >= s.mults.size()) throw InvalidInput("Cremona base index out of range");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (base[i] == base[j]) throw InvalidInput("Cremona base indices must be distinct");
  }
  CremonaStep step;
  step.k = 2 * s.d;
  for (auto b : base) step.k -= s.mults[b];
  step.system = s;
  step.system.d = s.d + step.k;
  for (auto b : base) {
    int m = s.mults[b] + step.k;
    if (m < 0) {
      m = 0;
      step.clamped = true;
    }
    step.system.mults[b] = m;
  }
  return step;
}

CremonaChain cremona_reduce(const P3System& s) {
  CremonaChain chain;
  P3System cur = s.pruned();
  chain.states.push_back(s);
  for (;;) {
    std::sort(cur.mults.begin(), cur.mults.end(), std::greater<>());
    if (cur.mults.size() < 4) break;
    CremonaStep step = cremona_step(cur, {0, 1, 2, 3});
    if (step.k >= 0) break;
    chain.clamped |= step.clamped;
    chain.steps.push_back(step);
    cur = step.system.pruned();
    chain.states.push_back(cur);
  }
  chain.reduced = cur;
  return chain;
}

}  // namespace fatpoints
