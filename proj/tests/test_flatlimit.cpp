#include <random>

#include "doctest.h"
#include "fatpoints/errors.hpp"
#include "fatpoints/flatlimit.hpp"
#include "fatpoints/tadic.hpp"

using namespace fatpoints;

namespace {
const PrimeField F{};
std::vector<int> rep(int m, int e) { return std::vector<int>(e, m); }
}  // namespace

TEST_CASE("families") {
  auto f = make_family({2, {2, 2, 2}}, 2, F, 1);
  CHECK(f.sections.size() == 3);
  for (const auto& s : f.sections)
    for (const auto& c : s) CHECK(c.coeff(0) == 0);
  CHECK(f.total_degree() == 9);
  CHECK(make_family({2, rep(1, 14)}, 2, F, 1).total_degree() == 14);
}

TEST_CASE("limit pieces of three double points in the plane") {
  auto f = make_family({2, {2, 2, 2}}, 2, F, 3);
  auto pieces = limit_pieces(f, 3, F, 3);
  REQUIRE(pieces.size() == 4);
  CHECK(pieces[2].basis.empty());
  CHECK(pieces[2].rank == 6);
  CHECK(pieces[3].rank == 9);
  REQUIRE(pieces[3].basis.size() == 1);
  CHECK(pieces[3].min_order == 3);
}

TEST_CASE("one and two simple points") {
  auto f = make_family({2, {1}}, 2, F, 4);
  auto pieces = limit_pieces(f, 1, F, 4);
  CHECK(pieces[1].basis.size() == 2);
  CHECK(pieces[1].min_order == 1);
  f = make_family({2, {1, 1}}, 2, F, 4);
  pieces = limit_pieces(f, 1, F, 4);
  REQUIRE(pieces[1].basis.size() == 1);
  // the limit line passes through the origin along the tangent difference
  auto dir = tangent_directions(f, F)[0];
  const auto& v = pieces[1].basis[0];
  CHECK(v[0] == 0);
  CHECK(F.add(F.mul(v[1], dir[0]), F.mul(v[2], dir[1])) == 0);
}

TEST_CASE("limit Hilbert functions") {
  struct Case {
    int n;
    std::vector<int> m;
    long degree;
    int mult;
  };
  for (const auto& c : {Case{2, rep(2, 3), 9, 3}, Case{2, rep(1, 14), 14, 4}, Case{3, rep(2, 4), 16, 3},
                        Case{2, rep(2, 5), 15, 4}, Case{2, {3}, 6, 3}}) {
    auto f = make_family({c.n, c.m}, 2, F, 7);
    auto r = limit_hilbert(f, std::nullopt, F, 7);
    CHECK(r.degree == c.degree);
    CHECK(r.multiplicity == c.mult);
    CHECK(r.hilbert.back() == f.total_degree());
  }
  auto f = make_family({2, rep(2, 3)}, 2, F, 7);
  CHECK_THROWS_AS(limit_hilbert(f, 2, F, 7), NotStabilized);
}

TEST_CASE("row-space route agrees with the kernel route") {
  for (auto [n, m] : {std::pair{2, rep(2, 3)}, std::pair{2, rep(1, 5)}, std::pair{3, rep(2, 3)}}) {
    auto f = make_family({n, m}, 2, F, 11);
    auto pieces = limit_pieces(f, 4, F, 11);
    for (int d = 1; d <= 4; ++d) {
      auto k = limit_piece_via_kernel(f, d, F, 200);
      CHECK(k.basis.size() == pieces[d].basis.size());
      if (!k.basis.empty()) {
        auto w = k.basis[0].size();
        CHECK(same_row_space(MatrixF::from_rows(k.basis, w), MatrixF::from_rows(pieces[d].basis, w), F));
      }
    }
  }
}

TEST_CASE("limit pieces do not depend on the tau used to select rows") {
  auto f = make_family({2, rep(2, 4)}, 2, F, 21);
  auto a = limit_pieces(f, 4, F, 1), b = limit_pieces(f, 4, F, 2);
  for (int d = 0; d <= 4; ++d) {
    REQUIRE(a[d].basis.size() == b[d].basis.size());
    if (!a[d].basis.empty()) {
      auto w = a[d].basis[0].size();
      CHECK(same_row_space(MatrixF::from_rows(a[d].basis, w), MatrixF::from_rows(b[d].basis, w), F));
    }
  }
}

TEST_CASE("candidate comparison") {
  auto f = make_family({2, rep(2, 3)}, 2, F, 5);
  auto r = limit_hilbert(f, std::nullopt, F, 5);
  CHECK(compare_with_candidate(r, tangent_candidate(f, F), 2, F) == Comparison::equal);

  f = make_family({3, rep(2, 4)}, 2, F, 5);
  r = limit_hilbert(f, std::nullopt, F, 5);
  CHECK(compare_with_candidate(r, tangent_candidate(f, F), 3, F) == Comparison::equal);

  // a triple point against a single line
  f = make_family({2, {3}}, 2, F, 5);
  r = limit_hilbert(f, std::nullopt, F, 5);
  CandidateScheme line;
  line.lines.emplace_back(std::vector<std::uint64_t>{1, 2}, F);
  line.jet_orders.push_back(4);
  CHECK(compare_with_candidate(r, line, 2, F) == Comparison::incomparable);
}

TEST_CASE("linear and quadratic sections give the same Hilbert function") {
  for (auto [n, m] : {std::pair{2, rep(2, 3)}, std::pair{2, rep(1, 14)}, std::pair{3, rep(2, 4)},
                      std::pair{3, rep(2, 5)}, std::pair{4, rep(2, 5)}}) {
    auto a = limit_hilbert(make_family({n, m}, 1, F, 9), std::nullopt, F, 9);
    auto b = limit_hilbert(make_family({n, m}, 2, F, 9), std::nullopt, F, 9);
    CHECK(a.hilbert == b.hilbert);
  }
}
