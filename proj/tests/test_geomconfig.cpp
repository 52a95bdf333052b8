#include "doctest.h"
#include "fatpoints/errors.hpp"
#include "fatpoints/geomconfig.hpp"

using namespace fatpoints;

namespace {
const MonteCarlo mc{};
const PrimeField F{};
}  // namespace

TEST_CASE("projected configurations") {
  auto c = build_projected_config(2, 3, F, 1);
  CHECK(c.b.size() == 3);
  c = build_projected_config(4, 7, F, 1);
  CHECK(c.b.size() == 21);
  for (const auto& p : c.b) CHECK(p.size() == 4);
  for (int n = 2; n <= 6; ++n) CHECK(build_projected_config(n, n + 1, F, 2).b.size() == binomial(n + 1, 2));
}

TEST_CASE("conditions on forms of R") {
  for (auto seed : mc.seeds) CHECK(conditions_rank(build_projected_config(4, 7, F, seed), 3, F) == 19);
  for (int n = 2; n <= 6; ++n) CHECK(conditions_rank(build_projected_config(n, n + 1, F, 3), 2, F) == binomial(n + 1, 2));
  for (int n = 3; n <= 5; ++n) CHECK(conditions_rank(build_projected_config(n, n + 2, F, 3), 3, F) == binomial(n + 2, 2));
  for (int n = 2; n <= 5; ++n)
    for (int l = 2; l <= 7; ++l)
      for (int e = 1; e <= 3; ++e) {
        auto cfg = build_projected_config(n, l, F, 4);
        CHECK(conditions_rank(cfg, e, F) <= std::min<std::size_t>(cfg.b.size(), binomial(n - 1 + e, n - 1)));
      }
}

TEST_CASE("threshold") {
  CHECK(n_k_threshold(0) == 2);
  CHECK(n_k_threshold(2) == 4);
  CHECK(n_k_threshold(3) == 5);
}

TEST_CASE("n+k conjecture reports") {
  auto r = verify_conjecture_nk(4, 3, mc);
  CHECK(r.expected == 20);
  CHECK(r.measured == 19);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.warnings.empty());
  r = verify_conjecture_nk(5, 2, mc);
  CHECK(r.expected == 21);
  CHECK(r.pass);
  r = verify_conjecture_nk(6, 0, mc);
  CHECK(r.expected == 15);
  CHECK(r.pass);
  CHECK_THROWS_AS(verify_conjecture_nk(2, 5, mc), InvalidInput);
}

TEST_CASE("sampled pairwise data") {
  for (auto [n, t] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 5}, std::pair{4, 6}, std::pair{3, 7}}) {
    auto w = sample_W(n, t, F, 5);
    CHECK(w.x.size() == binomial(t, 2));
    CHECK(w.scalars_drawn == static_cast<std::size_t>(n * (t - 1) + t - 2));
    CHECK(collinearity_holds(w, F));
  }
  CHECK_THROWS_AS(sample_W(1, 4, F, 1), InvalidInput);
  CHECK_THROWS_AS(sample_W(2, 2, F, 1), InvalidInput);
}

TEST_CASE("lifting round trip and perturbation") {
  for (auto [n, t] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 5}, std::pair{4, 6}, std::pair{3, 8}}) {
    for (std::uint64_t seed : {1u, 2u}) {
      auto w = sample_W(n, t, F, seed);
      auto pts = lift_preimage(w, F, seed);
      CHECK(pts.size() == static_cast<std::size_t>(t));
      auto chk = verify_lift(pts, w, F);
      CHECK_MESSAGE(chk.ok, chk.diagnostic);
      pts[0][0] = F.add(pts[0][0], 1);
      CHECK_FALSE(verify_lift(pts, w, F).ok);
    }
  }
}
