#include <random>

#include "doctest.h"
#include "fatpoints/conditions.hpp"
#include "fatpoints/errors.hpp"
#include "oracle.hpp"

using namespace fatpoints;

namespace {

FatPoint random_point(int n, int m, const PrimeField& f, std::mt19937_64& rng) {
  FatPoint q;
  q.multiplicity = m;
  for (int i = 0; i < n; ++i) q.coords.push_back(f.random(rng));
  return q;
}

}  // namespace

TEST_CASE("monomial basis order and prefixes") {
  auto b = MonomialBasis::affine(2, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Exponent{0, 0});
  CHECK(b[1] == Exponent{1, 0});
  CHECK(b[2] == Exponent{0, 1});
  CHECK(b[3] == Exponent{2, 0});
  CHECK(b.prefix_size(1) == 3);
  CHECK(b.index_of({1, 1}) == 4);
  CHECK_THROWS_AS(b.index_of({3, 0}), InvalidInput);
  auto big = MonomialBasis::affine(3, 5);
  auto small = MonomialBasis::affine(3, 3);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i]);
  auto q = MonomialBasis::biprojective(2, 3);
  CHECK(q.size() == 12);
  CHECK(q[5] == Exponent{1, 1});
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("fat point row counts") {
  PrimeField f;
  std::mt19937_64 rng(1);
  auto b3 = MonomialBasis::affine(3, 6);
  CHECK(fat_point_rows(random_point(3, 1, f, rng), b3, f).rows() == 1);
  CHECK(fat_point_rows(random_point(3, 2, f, rng), b3, f).rows() == 4);
  CHECK(fat_point_rows(random_point(3, 5, f, rng), b3, f).rows() == 35);
  // a simple point is evaluation
  auto q = random_point(2, 1, f, rng);
  auto b = MonomialBasis::affine(2, 3);
  auto row = fat_point_rows(q, b, f);
  for (std::size_t c = 0; c < b.size(); ++c)
    CHECK(row(0, c) == f.mul(f.pow(q.coords[0], b[c][0]), f.pow(q.coords[1], b[c][1])));
}

TEST_CASE("line jets") {
  PrimeField f;
  auto b = MonomialBasis::affine(2, 4);
  OriginLine l({3, 5}, f);
  CHECK(l.direction()[0] == 1);
  auto r1 = line_jet_rows(l, 1, b, f);
  REQUIRE(r1.rows() == 1);
  CHECK(r1(0, 0) == 1);
  for (std::size_t c = 1; c < b.size(); ++c) CHECK(r1(0, c) == 0);
  CHECK(line_jet_rows(l, 4, b, f).rows() == 4);
  CHECK_THROWS_AS(OriginLine({0, 0}, f), InvalidInput);
}

TEST_CASE("fat point rows match the line-restriction oracle") {
  PrimeField f(oracle::P);
  std::mt19937_64 rng(5);
  for (auto [n, m, d] : {std::tuple{2, 3, 5}, std::tuple{3, 2, 4}, std::tuple{3, 4, 5}, std::tuple{4, 3, 4}}) {
    auto q = random_point(n, m, f, rng);
    auto basis = MonomialBasis::affine(n, d);
    auto mine = fat_point_rows(q, basis, f);
    // oracle rows use their own monomial order; reorder columns
    auto exps = oracle::exponents(n, d);
    auto orows = oracle::fat_point_conditions(q.coords, m, d, rng);
    MatrixF theirs(orows.size(), basis.size());
    for (std::size_t r = 0; r < orows.size(); ++r)
      for (std::size_t c = 0; c < exps.size(); ++c) theirs(r, basis.index_of(exps[c])) = orows[r][c];
    CHECK(same_row_space(mine, theirs, f));
  }
}

TEST_CASE("moving point specializes to the fixed point") {
  PrimeField f;
  std::mt19937_64 rng(8);
  const int n = 3, m = 3;
  auto basis = MonomialBasis::affine(n, 4);
  std::vector<TPolynomial> sigma;
  for (int i = 0; i < n; ++i) sigma.push_back(TPolynomial{0, f.random(rng), f.random(rng)});
  auto moving = moving_fat_point_rows(sigma, m, basis, f);
  CHECK(moving.rows() == binomial(m - 1 + n, n));
  auto tau = f.random_nonzero(rng);
  FatPoint q{{}, m};
  for (auto& s : sigma) q.coords.push_back(s.eval(tau, f));
  CHECK(same_row_space(moving.evaluate(tau, f), fat_point_rows(q, basis, f), f));
  sigma[0] = TPolynomial{1, 1};
  CHECK_THROWS_AS(moving_fat_point_rows(sigma, m, basis, f), InvalidInput);
}

TEST_CASE("simple points impose independent conditions") {
  PrimeField f;
  std::mt19937_64 rng(2);
  auto basis = MonomialBasis::affine(3, 3);
  MatrixF m(0, basis.size());
  for (int i = 0; i < 20; ++i) m.append_rows(fat_point_rows(random_point(3, 1, f, rng), basis, f));
  CHECK(rank(m, f) == 20);
}

TEST_CASE("characteristic must exceed the degree") {
  PrimeField f(7);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(fat_point_rows(random_point(2, 2, f, rng), MonomialBasis::affine(2, 7), f), ConfigError);
}

TEST_CASE("origin order and form evaluation") {
  PrimeField f;
  auto b = MonomialBasis::affine(2, 3);
  VectorF c(b.size(), 0);
  CHECK(origin_order(c, b) == -1);
  c[b.index_of({1, 2})] = 5;
  CHECK(origin_order(c, b) == 3);
  c[b.index_of({0, 1})] = 1;
  CHECK(origin_order(c, b) == 1);
  auto rows = form_evaluation_rows({{1, 2}, {3, 4}, {5, 6}}, 2, f);
  CHECK(rows.rows() == 3);
  CHECK(rows.cols() == 3);
  CHECK(rank(rows, f) == 3);
}
