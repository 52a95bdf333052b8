#include "fatpoints/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fatpoints/collision.hpp"
#include "fatpoints/cremona.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/flatlimit.hpp"
#include "fatpoints/geomconfig.hpp"
#include "fatpoints/linsys.hpp"

namespace fatpoints::cli {

namespace {

std::string join_mults(const std::vector<int>& m) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.size(); ++i) s << (i ? "," : "") << m[i];
  return s.str();
}

std::vector<int> repeat(int m, int e) { return std::vector<int>(static_cast<std::size_t>(e), m); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// One flat-limit measurement per seed, required to agree.
struct FlatOutcome {
  long degree = 0;
  int multiplicity = 0;
  std::vector<long> hilbert;
  std::vector<Comparison> comparisons;   // per seed, tangent candidate
  std::vector<long> direction_ranks;     // per seed, tangent directions on forms of degree `multiplicity`
};

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary(const std::string& good) const {
    if (failures_.empty()) return good;
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 6) s += "; +" + std::to_string(failures_.size() - 6) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg), mc_(cfg.monte_carlo()) {}

  const FlatOutcome& flat(int n, const std::vector<int>& mults, std::optional<int> D) {
    std::string key = std::to_string(n) + ":" + join_mults(mults) + ":" + (D ? std::to_string(*D) : "auto");
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FlatOutcome out;
    bool first = true;
    for (auto seed : mc_.seeds) {
      auto fam = make_family(CollisionSpec{n, mults}, cfg_.jet_degree, mc_.field, seed);
      auto rep = limit_hilbert(fam, D, mc_.field, seed);
      if (first) {
        out.degree = rep.degree;
        out.multiplicity = rep.multiplicity;
        out.hilbert = rep.hilbert;
        first = false;
      } else if (rep.hilbert != out.hilbert || rep.multiplicity != out.multiplicity) {
        throw NumericalAbort("flat limit of " + key + " differs between seeds");
      }
      if (mults.size() >= 2) {
        bool doubles = std::all_of(mults.begin(), mults.end(), [](int m) { return m == 2; });
        out.comparisons.push_back(doubles ? compare_with_candidate(rep, tangent_candidate(fam, mc_.field), n, mc_.field)
                                          : Comparison::not_checked);
        auto dirs = tangent_directions(fam, mc_.field);
        out.direction_ranks.push_back(static_cast<long>(rank(form_evaluation_rows(dirs, rep.multiplicity, mc_.field), mc_.field)));
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  std::optional<int> auto_or_override() const { return cfg_.max_degree; }
  const MonteCarlo& mc() const { return mc_; }

  CriterionResult run(const std::string& id);

 private:
  std::string ac1(Checks& c);
  std::string ac2(Checks& c);
  std::string ac3(Checks& c);
  std::string ac4(Checks& c);
  std::string ac5(Checks& c);
  std::string ac6(Checks& c);
  std::string ac7(Checks& c);
  std::string ac8(Checks& c);
  std::string ac9(Checks& c);
  std::string ac10(Checks& c);
  std::string ac11(Checks& c);
  std::string ac12(Checks& c);

  RunConfig cfg_;
  MonteCarlo mc_;
  std::map<std::string, FlatOutcome> cache_;
};

struct CriterionInfo {
  const char* id;
  const char* title;
  double budget;
  std::string (Runner::*fn)(Checks&);
};

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> table = {
      {"AC1", "double-point speciality sweep n<=4, d=2..6, h<=20", 60, nullptr},
      {"AC2", "three double points in A^2: triple point with 3 directions", 1, nullptr},
      {"AC3", "fourteen simple points in A^2: 4-fold point", 1, nullptr},
      {"AC4", "double-point collisions in A^2, A^3, A^4", 30, nullptr},
      {"AC5", "seven projected points in P^4 on cubics: rank 19", 1, nullptr},
      {"AC6", "projected-pairs candidate tables for n=3 and n=4", 30, nullptr},
      {"AC7", "five quintuple points in A^3: multiplicity 9, degree 175", 300, nullptr},
      {"AC8", "Cremona chain from L(3,7;4^6)", 5, nullptr},
      {"AC9", "collision degeneration of L(3,d;m^15,1^(m+1))", 120, nullptr},
      {"AC10", "L(4,8;3^11) is non-special", 120, nullptr},
      {"AC11", "lift round trip and free-parameter count", 5, nullptr},
      {"AC12", "flat-limit multiplicity and degree agree with the predictions", 0, nullptr},
  };
  return table;
}

std::string Runner::ac1(Checks& c) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int h = 0; h <= 20; ++h) {
        auto r = generic_dim(SystemSpec::projective(n, d, repeat(2, h)), mc_);
        bool predicted = ah_oracle(n, d, h) == AhVerdict::special;
        c.expect(r.special == predicted, "(n,d,h)=(" + std::to_string(n) + "," + std::to_string(d) + "," +
                                             std::to_string(h) + ") measured " + (r.special ? "special" : "non-special"));
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " systems agree with the double-point table";
}

std::string Runner::ac2(Checks& c) {
  const auto& o = flat(2, {2, 2, 2}, auto_or_override());
  c.expect(o.multiplicity == 3, "multiplicity " + std::to_string(o.multiplicity));
  c.expect(o.degree == 9, "degree " + std::to_string(o.degree));
  for (auto cmp : o.comparisons) c.expect(cmp == Comparison::equal, std::string("candidate ") + to_string(cmp));
  return "multiplicity 3, degree 9, candidate equal in every degree";
}

std::string Runner::ac3(Checks& c) {
  const auto& o = flat(2, repeat(1, 14), auto_or_override());
  c.expect(o.multiplicity == 4, "multiplicity " + std::to_string(o.multiplicity));
  c.expect(o.degree == 14, "degree " + std::to_string(o.degree));
  return "multiplicity 4, degree 14";
}

std::string Runner::ac4(Checks& c) {
  struct Case {
    int n, h;
    long degree;
    int mult;
  };
  const Case cases[] = {{2, 3, 9, 3}, {3, 4, 16, 3}, {3, 5, 20, 4}, {4, 5, 25, 3}};
  std::string detail;
  for (const auto& k : cases) {
    const std::string tag = "(A^" + std::to_string(k.n) + ",2^" + std::to_string(k.h) + ")";
    const auto& o = flat(k.n, repeat(2, k.h), auto_or_override());
    c.expect(o.degree == k.degree, tag + " degree " + std::to_string(o.degree));
    c.expect(o.multiplicity == k.mult, tag + " multiplicity " + std::to_string(o.multiplicity));
    auto pred = classify_limit(CollisionSpec{k.n, repeat(2, k.h)}, mc_);
    const auto& desc = pred.description;
    const long full = static_cast<long>(binomial(k.n + k.mult - 1, k.n - 1));
    for (long r : o.direction_ranks) {
      // directions count only when the description carries them
      long h0 = desc.kind == DescriptionKind::triple_with_directions ? full - r : full;
      long deg = infinitely_near_degree(k.n, k.mult, h0);
      c.expect(deg == o.degree, tag + " description degree " + std::to_string(deg));
    }
    c.expect(desc.m == k.mult, tag + " described as " + to_string(desc));
    detail += (detail.empty() ? "" : "; ") + tag + " " + to_string(desc);
  }
  return detail;
}

std::string Runner::ac5(Checks& c) {
  for (auto seed : mc_.seeds) {
    auto r = conditions_rank(build_projected_config(4, 7, mc_.field, seed), 3, mc_.field);
    c.expect(r == 19, "rank " + std::to_string(r));
  }
  return "rank 19 for every seed";
}

std::string Runner::ac6(Checks& c) {
  struct Row {
    int n, m;
    long degree;
    int mult;
  };
  const Row rows[] = {{3, 2, 4, 1},  {3, 3, 9, 1},  {3, 4, 16, 3}, {3, 5, 20, 4},  {4, 2, 4, 1},  {4, 3, 9, 1},
                      {4, 4, 16, 1}, {4, 5, 25, 3}, {4, 6, 30, 3}, {4, 7, 34, 3}, {4, 8, 35, 4}};
  const int D = cfg_.max_degree.value_or(8);
  for (auto seed : mc_.seeds) {
    std::mt19937_64 rng(seed);
    for (const auto& r : rows) {
      auto cand = projected_pairs_candidate(r.n, r.m, 4, mc_.field, rng);
      auto h = candidate_hilbert(cand, r.n, D, mc_.field);
      std::string tag = "n=" + std::to_string(r.n) + " m=" + std::to_string(r.m);
      c.expect(h.degree == r.degree, tag + " degree " + std::to_string(h.degree));
      c.expect(h.multiplicity == r.mult, tag + " multiplicity " + std::to_string(h.multiplicity));
    }
  }
  return "n=3 degrees 4,9,16,20; n=4 degrees 4,9,16,25,30,34,35; multiplicities as tabulated";
}

std::string Runner::ac7(Checks& c) {
  const auto& o = flat(3, repeat(5, 5), 10);
  c.expect(o.multiplicity == 9, "multiplicity " + std::to_string(o.multiplicity));
  c.expect(o.degree == 175, "degree " + std::to_string(o.degree));
  c.expect(infinitely_near_degree(3, 9, 45) == 175, "infinitely_near_degree(3,9,45) != 175");
  return "multiplicity 9, degree 175 at D = 10";
}

std::string Runner::ac8(Checks& c) {
  auto chain = cremona_reduce({7, repeat(4, 6)});
  auto sorted = [](P3System s) {
    std::sort(s.mults.begin(), s.mults.end());
    return s;
  };
  auto contains = [&](const P3System& want) {
    return std::any_of(chain.states.begin(), chain.states.end(),
                       [&](const P3System& s) { return sorted(s) == sorted(want); });
  };
  c.expect(contains({5, {2, 2, 2, 2, 4, 4}}), "chain misses (5,[4,4,2,2,2,2])");
  c.expect(contains({3, {2, 2, 2, 2}}), "chain misses (3,[2,2,2,2])");
  std::string dims;
  for (const P3System& s : {P3System{7, repeat(4, 6)}, P3System{3, repeat(2, 4)}, chain.reduced}) {
    long dim = generic_dim(s.to_spec(), mc_).measured_dim;
    c.expect(dim == 4, "dim " + to_string(s) + " = " + std::to_string(dim));
    dims += (dims.empty() ? "" : ", ") + to_string(s) + ":" + std::to_string(dim);
  }
  std::string chain_text;
  for (const auto& s : chain.states) chain_text += (chain_text.empty() ? "" : " -> ") + to_string(s);
  return chain_text + "; dims " + dims;
}

std::string Runner::ac9(Checks& c) {
  std::string detail;
  for (auto [m, d] : {std::pair{2, 6}, std::pair{3, 9}, std::pair{4, 12}}) {
    auto spec = SystemSpec::projective(3, d, concat(repeat(m, 15), repeat(1, m + 1)));
    auto deg = apply_collision_degeneration(spec, concat(repeat(m, 8), repeat(1, m + 1)), mc_);
    auto want = SystemSpec::projective(3, d, concat({2 * m + 1}, repeat(m, 7)));
    c.expect(deg.result == want, to_string(spec) + " degenerates to " + to_string(deg.result));
    c.expect(deg.prediction.citation == "eight-fat-points-plus-simple-points-in-p3",
             "rule " + deg.prediction.citation);
    auto r = generic_dim(deg.result, mc_);
    c.expect(r.measured_dim == r.edim, to_string(deg.result) + " dim " + std::to_string(r.measured_dim) + " vs edim " +
                                           std::to_string(r.edim));
    detail += (detail.empty() ? "" : "; ") + to_string(deg.result) + " dim " + std::to_string(r.measured_dim);
  }
  return detail;
}

std::string Runner::ac10(Checks& c) {
  auto r = generic_dim(SystemSpec::projective(4, 8, repeat(3, 11)), mc_);
  c.expect(r.measured_dim == r.vdim, "dim " + std::to_string(r.measured_dim) + " vs vdim " + std::to_string(r.vdim));
  return "dim " + std::to_string(r.measured_dim) + " = vdim";
}

std::string Runner::ac11(Checks& c) {
  for (auto [n, t] : {std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 5}, std::pair{4, 6}}) {
    for (auto seed : mc_.seeds) {
      std::string tag = "(n,t)=(" + std::to_string(n) + "," + std::to_string(t) + ")";
      auto w = sample_W(n, t, mc_.field, seed);
      auto want = static_cast<std::size_t>(n * (t - 1) + t - 2);
      c.expect(w.scalars_drawn == want, tag + " drew " + std::to_string(w.scalars_drawn));
      auto pts = lift_preimage(w, mc_.field, seed);
      auto chk = verify_lift(pts, w, mc_.field);
      c.expect(chk.ok, tag + " " + chk.diagnostic);
    }
  }
  return "4 configurations lifted and verified, free parameters n(t-1)+t-2";
}

std::string Runner::ac12(Checks& c) {
  struct Case {
    int n;
    std::vector<int> mults;
    std::optional<int> D;
  };
  const std::vector<Case> cases = {{2, repeat(2, 3), auto_or_override()}, {2, repeat(1, 14), auto_or_override()},
                                   {3, repeat(2, 4), auto_or_override()}, {3, repeat(2, 5), auto_or_override()},
                                   {4, repeat(2, 5), auto_or_override()}, {3, repeat(5, 5), 10}};
  for (const auto& k : cases) {
    const auto& o = flat(k.n, k.mults, k.D);
    std::string tag = "(A^" + std::to_string(k.n) + "," + join_mults(k.mults) + ")";
    int j = min_nonzero_degree(k.n, k.mults, mc_);
    c.expect(o.multiplicity == j, tag + " multiplicity " + std::to_string(o.multiplicity) + " vs " + std::to_string(j));
    long total = CollisionSpec{k.n, k.mults}.total_degree();
    c.expect(o.degree == total, tag + " degree " + std::to_string(o.degree) + " vs " + std::to_string(total));
  }
  return std::to_string(cases.size()) + " collisions consistent";
}

CriterionResult Runner::run(const std::string& id) {
  static const std::map<std::string, std::string (Runner::*)(Checks&)> fns = {
      {"AC1", &Runner::ac1}, {"AC2", &Runner::ac2},   {"AC3", &Runner::ac3},   {"AC4", &Runner::ac4},
      {"AC5", &Runner::ac5}, {"AC6", &Runner::ac6},   {"AC7", &Runner::ac7},   {"AC8", &Runner::ac8},
      {"AC9", &Runner::ac9}, {"AC10", &Runner::ac10}, {"AC11", &Runner::ac11}, {"AC12", &Runner::ac12}};
  const auto& info = *std::find_if(criteria().begin(), criteria().end(), [&](const auto& x) { return x.id == id; });
  CriterionResult r;
  r.id = id;
  r.title = info.title;
  r.budget_seconds = info.budget;
  Checks checks;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = (this->*fns.at(id))(checks);
    r.detail = checks.summary(r.detail);
    r.pass = checks.ok();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += "; over time budget";
  }
  return r;
}

}  // namespace

const std::vector<std::string>& acceptance_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : criteria()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::string normalize_criterion_id(const std::string& id) {
  std::string s = id;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (s.rfind("AC", 0) != 0) s = "AC" + s;
  const auto& ids = acceptance_ids();
  if (std::find(ids.begin(), ids.end(), s) == ids.end()) throw InvalidInput("unknown acceptance criterion '" + id + "'");
  return s;
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& ids, const RunConfig& cfg) {
  std::vector<std::string> todo;
  for (const auto& id : ids) {
    if (id == "all") {
      todo = acceptance_ids();
      break;
    }
    todo.push_back(normalize_criterion_id(id));
  }
  Runner runner(cfg);
  std::vector<CriterionResult> out;
  for (const auto& id : todo) out.push_back(runner.run(id));
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"title", r.title},   {"pass", r.pass},
          {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}, {"detail", r.detail}};
}

}  // namespace fatpoints::cli
