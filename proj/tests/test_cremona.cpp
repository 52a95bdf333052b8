#include <random>

#include "doctest.h"
#include "fatpoints/cremona.hpp"
#include "fatpoints/errors.hpp"

using namespace fatpoints;

namespace {
const MonteCarlo mc{};
}

TEST_CASE("single steps") {
  auto s = cremona_step({7, {4, 4, 4, 4, 4, 4}}, {0, 1, 2, 3});
  CHECK(s.k == -2);
  CHECK(s.system == P3System{5, {2, 2, 2, 2, 4, 4}});
  s = cremona_step({5, {4, 4, 2, 2, 2, 2}}, {0, 1, 2, 3});
  CHECK(s.system == P3System{3, {2, 2, 0, 0, 2, 2}});
  CHECK(s.system.pruned() == P3System{3, {2, 2, 2, 2}});
  s = cremona_step({4, {2, 2, 2, 2}}, {0, 1, 2, 3});
  CHECK(s.k == 0);
  CHECK(s.system == P3System{4, {2, 2, 2, 2}});
  CHECK_THROWS_AS(cremona_step({4, {2, 2, 2}}, {0, 1, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(cremona_step({4, {2, 2, 2, 2}}, {0, 1, 1, 3}), InvalidInput);
}

TEST_CASE("reduction chain") {
  auto c = cremona_reduce({7, {4, 4, 4, 4, 4, 4}});
  REQUIRE(c.states.size() == 4);
  CHECK(c.states[1] == P3System{5, {2, 2, 2, 2, 4, 4}});
  CHECK(c.states[2] == P3System{3, {2, 2, 2, 2}});
  CHECK(c.reduced == P3System{1, {}});
  CHECK_FALSE(c.clamped);
  CHECK(cremona_reduce({3, {1, 1, 1, 1}}).steps.empty());
  CHECK(generic_dim(P3System{3, {2, 2, 2, 2}}.to_spec(), mc).measured_dim == 4);
}

TEST_CASE("involution and dimension invariance") {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    P3System s{2 + static_cast<int>(rng() % 7), {}};
    const int r = 4 + rng() % 5;
    for (int i = 0; i < r; ++i) s.mults.push_back(1 + rng() % s.d);
    auto once = cremona_step(s, {0, 1, 2, 3});
    if (once.clamped || once.system.d < 0) continue;
    CHECK(cremona_step(once.system, {0, 1, 2, 3}).system == s);
    bool ok = true;
    for (int m : once.system.mults) ok &= m <= once.system.d;
    if (!ok) continue;
    CAPTURE(to_string(s));
    CHECK(generic_dim(s.to_spec(), mc).measured_dim == generic_dim(once.system.to_spec(), mc).measured_dim);
    ++checked;
  }
  CHECK(checked > 10);
}
