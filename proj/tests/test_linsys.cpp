#include <random>

#include "doctest.h"
#include "fatpoints/errors.hpp"
#include "fatpoints/linsys.hpp"
#include "oracle.hpp"

using namespace fatpoints;

namespace {
const MonteCarlo mc{};
SystemSpec L(int n, int d, std::vector<int> m) { return SystemSpec::projective(n, d, std::move(m)); }
std::vector<int> rep(int m, int e) { return std::vector<int>(e, m); }
}  // namespace

TEST_CASE("virtual and expected dimension") {
  CHECK(vdim(L(2, 4, rep(2, 5))) == 0);
  CHECK(vdim(L(4, 5, rep(3, 6))) == 36);
  CHECK(vdim(L(3, 6, {5, 2, 2, 2, 2, 2, 2, 2})) == 21);
  CHECK(edim(L(2, 4, rep(2, 5))) == 0);
  CHECK(vdim(L(3, 8, rep(5, 5))) == -10);
  CHECK(edim(L(3, 8, rep(5, 5))) == 0);
  CHECK(edim(L(3, 4, {})) == 35);
}

TEST_CASE("measured dimensions") {
  auto r = generic_dim(L(2, 4, rep(2, 5)), mc);
  CHECK(r.measured_dim == 1);
  CHECK(r.special);
  r = generic_dim(L(4, 3, rep(2, 7)), mc);
  CHECK(r.measured_dim == 1);
  CHECK(r.special);
  CHECK(r.vdim == 0);
  r = generic_dim(L(3, 3, rep(2, 4)), mc);
  CHECK(r.measured_dim == 4);
  CHECK_FALSE(r.special);
  CHECK(r.seeds == mc.seeds);
  CHECK(generic_dim(SystemSpec::bidegree(3, 3, {2}), mc).measured_dim == 13);
  CHECK_THROWS_AS(generic_dim(L(2, 9, {2}), MonteCarlo{PrimeField(7), kDefaultSeeds}), ConfigError);
}

TEST_CASE("measured dimensions agree with the independent oracle") {
  // frozen from oracle::generic_dim over 2^31 - 1
  struct Row {
    int n, d;
    std::vector<int> m;
    long dim;
  };
  const std::vector<Row> rows = {{2, 4, rep(2, 5), 1},           {4, 3, rep(2, 7), 1},
                                 {3, 3, rep(2, 4), 4},           {3, 4, rep(2, 9), 1},
                                 {2, 6, {3, 3, 2}, 13},          {3, 6, {5, 2, 2, 2, 2, 2, 2, 2}, 21},
                                 {2, 5, {3, 2, 2, 2, 1}, 5},     {3, 4, {3, 3, 2}, 12}};
  for (const auto& r : rows) {
    CAPTURE(to_string(L(r.n, r.d, r.m)));
    CHECK(oracle::generic_dim(r.n, r.d, r.m, 17) == r.dim);
    CHECK(generic_dim(L(r.n, r.d, r.m), mc).measured_dim == r.dim);
  }
}

TEST_CASE("double-point table") {
  CHECK(ah_oracle(2, 4, 5) == AhVerdict::special);
  CHECK(ah_oracle(4, 4, 14) == AhVerdict::special);
  CHECK(ah_oracle(3, 5, 10) == AhVerdict::non_special);
  CHECK(ah_oracle(3, 2, 3) == AhVerdict::special);
  CHECK(ah_oracle(3, 2, 4) == AhVerdict::non_special);
  CHECK(ah_oracle(3, 1, 2) == AhVerdict::out_of_scope);
}

TEST_CASE("double points: speciality matches the table (n <= 3, d <= 5)") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 5; ++d)
      for (int h = 0; h <= 12; ++h) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(h);
        CHECK(generic_dim(L(n, d, rep(2, h)), mc).special == (ah_oracle(n, d, h) == AhVerdict::special));
      }
}

TEST_CASE("semicontinuity floor and monotonicity on random systems") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + rng() % 2, d = 2 + rng() % 4;
    std::vector<int> m;
    for (int i = 0, r = rng() % 6; i < r; ++i) m.push_back(1 + rng() % 3);
    auto s = L(n, d, m);
    auto r = generic_dim(s, mc);
    CHECK(r.measured_dim >= r.edim);
    auto more = m;
    more.push_back(1);
    CHECK(generic_dim(L(n, d, more), mc).measured_dim <= r.measured_dim);
    if (!m.empty()) {
      auto raised = m;
      raised[0] += 1;
      CHECK(generic_dim(L(n, d, raised), mc).measured_dim <= r.measured_dim);
    }
  }
}

TEST_CASE("multiplicity of the smallest nonzero degree") {
  CHECK(min_nonzero_degree(2, {2, 2, 2}, mc) == 3);
  CHECK(min_nonzero_degree(2, rep(1, 14), mc) == 4);
  CHECK(min_nonzero_degree(4, rep(2, 7), mc) == 3);
  CHECK(min_nonzero_degree(3, rep(5, 5), mc) == 9);
}

TEST_CASE("P1 x P1 to the plane") {
  CHECK(p1p1_to_p2(3, 3, 2) == L(2, 6, {3, 3, 2}));
  CHECK(p1p1_to_p2(2, 3, 0) == L(2, 5, {3, 2}));
  CHECK(generic_dim(p1p1_to_p2(2, 3, 0), mc).measured_dim == 12);
  CHECK(generic_dim(p1p1_to_p2(1, 1, 1), mc).measured_dim == 3);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    int a = 1 + rng() % 6, b = 1 + rng() % 6, m = rng() % 5;
    CHECK(generic_dim(p1p1_to_p2(a, b, m), mc).measured_dim ==
          generic_dim(SystemSpec::bidegree(a, b, m ? std::vector<int>{m} : std::vector<int>{}), mc).measured_dim);
  }
}

TEST_CASE("non-speciality predicate") {
  CHECK(lu_predicate(9, 3));
  CHECK_FALSE(lu_predicate(4, 2));
  for (int m = 1; m < 20; ++m) CHECK_FALSE(lu_predicate(2 * m - 2, m));
}

TEST_CASE("spec grammar") {
  CHECK(parse_system("L(3,7;4^6)") == L(3, 7, rep(4, 6)));
  CHECK(parse_system("L(2,5;1,3^2,1)") == L(2, 5, {3, 3, 1, 1}));
  CHECK(parse_system("Q(3,3;2)") == SystemSpec::bidegree(3, 3, {2}));
  CHECK(parse_system(" L( 2 , 3 ; ) ") == L(2, 3, {}));
  CHECK(parse_system("L(2,3)") == L(2, 3, {}));
  CHECK(to_string(L(3, 7, rep(4, 6))) == "L(3,7;4^6)");
  CHECK(to_string(L(3, 5, {4, 4, 2, 2, 2, 2})) == "L(3,5;4^2,2^4)");
  for (const auto& s : {L(3, 7, rep(4, 6)), L(2, 4, {}), L(4, 8, {5, 3, 3, 1}), SystemSpec::bidegree(2, 5, {3})})
    CHECK(parse_system(to_string(s)) == s);
  try {
    parse_system("L(2,4;2^)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_system("M(2,4;2)"), ParseError);
  CHECK_THROWS_AS(parse_system("L(2,4;2"), ParseError);
  CHECK_THROWS_AS(parse_system("L(2,4;2) x"), ParseError);
  CHECK_THROWS_AS(parse_system("L(0,4;2)"), ParseError);
}
