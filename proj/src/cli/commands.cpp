#include "fatpoints/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "fatpoints/cli/acceptance.hpp"
#include "fatpoints/cli/spec_parser.hpp"
#include "fatpoints/collision.hpp"
#include "fatpoints/cremona.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/flatlimit.hpp"
#include "fatpoints/geomconfig.hpp"
#include "fatpoints/linsys.hpp"

namespace fatpoints::cli {

using nlohmann::json;

namespace {

Report start(const std::string& command, const RunConfig& cfg) {
  Report r;
  r.command = command;
  r.config = cfg.to_json();
  return r;
}

void add_citation(Report& r, const std::string& id) {
  if (id.empty() || id == "none") return;
  if (std::find(r.citations.begin(), r.citations.end(), id) == r.citations.end()) r.citations.push_back(id);
}

void check_failed(Report& r, const std::string& what) {
  r.status = "check-failure";
  r.exit_code = 1;
  if (!r.error.empty()) r.error += "; ";
  r.error += what;
}

json dim_json(const SystemSpec& s, const DimReport& d) {
  return {{"spec", to_string(s)}, {"measured_dim", d.measured_dim}, {"vdim", d.vdim},
          {"edim", d.edim},       {"special", d.special},           {"trials", d.trials}};
}

bool all_doubles(const std::vector<int>& m) {
  return !m.empty() && std::all_of(m.begin(), m.end(), [](int x) { return x == 2; });
}

json ints(const std::vector<long>& v) { return json(v); }

}  // namespace

Report cmd_dim(const std::string& text, const RunConfig& cfg) {
  Report r = start("dim " + text, cfg);
  const auto mc = cfg.monte_carlo();
  const SystemSpec spec = parse_system(text);
  const DimReport d = generic_dim(spec, mc);
  r.results = dim_json(spec, d);
  if (!spec.p1p1 && all_doubles(spec.mults)) {
    AhVerdict v = ah_oracle(spec.n, spec.d, static_cast<int>(spec.mults.size()));
    r.results["double_point_table"] = to_string(v);
    if (v != AhVerdict::out_of_scope) {
      add_citation(r, "double-point-classification");
      if ((v == AhVerdict::special) != d.special) check_failed(r, "measured speciality disagrees with the double-point table");
    }
  }
  if (spec.p1p1 && spec.mults.size() == 1) {
    const SystemSpec p2 = p1p1_to_p2(spec.a, spec.b, spec.mults[0]);
    const DimReport dp = generic_dim(p2, mc);
    r.results["plane_equivalent"] = dim_json(p2, dp);
    add_citation(r, "quadric-to-plane-projection");
    if (dp.measured_dim != d.measured_dim) check_failed(r, "dimension differs from the plane equivalent");
  }
  return r;
}

Report cmd_collide(int n, const std::string& mult_text, CollideFlags flags, const RunConfig& cfg) {
  if (flags.compare) flags.measure = true;
  if (!flags.measure) flags.classify = true;
  std::string cmd = "collide " + std::to_string(n) + " " + mult_text;
  if (flags.classify) cmd += " --classify";
  if (flags.measure) cmd += " --measure";
  if (flags.compare) cmd += " --compare";
  Report r = start(cmd, cfg);
  const auto mc = cfg.monte_carlo();
  if (n < 1) throw InvalidInput("n must be >= 1");
  const CollisionSpec spec{n, parse_multiplicities(mult_text)};
  r.results["n"] = n;
  r.results["multiplicities"] = spec.mults;
  r.results["total_degree"] = spec.total_degree();

  std::optional<LimitPrediction> pred;
  if (flags.classify) {
    pred = classify_limit(spec, mc);
    r.results["prediction"] = {{"multiplicity", pred->multiplicity},
                               {"degree", pred->degree},
                               {"description", to_string(pred->description)},
                               {"rule", pred->citation},
                               {"diagnostics", pred->diagnostics}};
    add_citation(r, pred->citation);
    r.warnings.insert(r.warnings.end(), pred->warnings.begin(), pred->warnings.end());
  }

  if (flags.measure) {
    std::optional<LimitReport> first;
    std::vector<std::string> comparisons;
    const bool comparable = spec.mults.size() >= 2 && all_doubles(spec.mults);
    if (flags.compare && !comparable) r.warnings.push_back("candidate comparison needs at least two double points; not checked");
    for (auto seed : mc.seeds) {
      auto fam = make_family(spec, cfg.jet_degree, mc.field, seed);
      auto rep = limit_hilbert(fam, cfg.max_degree, mc.field, seed);
      if (!first) {
        first = rep;
      } else if (rep.hilbert != first->hilbert || rep.multiplicity != first->multiplicity) {
        throw NumericalAbort("flat limit differs between seeds");
      }
      if (flags.compare && comparable) {
        comparisons.push_back(to_string(compare_with_candidate(rep, tangent_candidate(fam, mc.field), n, mc.field)));
      }
    }
    r.results["measured"] = {{"D", first->D},
                             {"hilbert", ints(first->hilbert)},
                             {"degree", first->degree},
                             {"multiplicity", first->multiplicity},
                             {"jet_degree", cfg.jet_degree}};
    if (flags.compare) {
      if (!comparable) {
        r.results["comparison"] = to_string(Comparison::not_checked);
      } else if (std::adjacent_find(comparisons.begin(), comparisons.end(), std::not_equal_to<>()) != comparisons.end()) {
        throw NumericalAbort("candidate comparison differs between seeds");
      } else {
        r.results["comparison"] = comparisons.front();
        add_citation(r, "doubles-limit-vs-tangent-candidate");
      }
    }
    if (pred && pred->multiplicity != first->multiplicity) {
      check_failed(r, "measured multiplicity " + std::to_string(first->multiplicity) + " differs from predicted " +
                          std::to_string(pred->multiplicity));
    }
  }
  return r;
}

Report cmd_conjecture(int n, int k, const RunConfig& cfg) {
  Report r = start("conjecture " + std::to_string(n) + " " + std::to_string(k), cfg);
  auto c = verify_conjecture_nk(n, k, cfg.monte_carlo());
  r.results = {{"n", c.n},          {"k", c.k},         {"points", c.n + c.k},
               {"expected", c.expected}, {"measured", c.measured}, {"in_range", c.in_range},
               {"pass", c.pass}};
  r.warnings = c.warnings;
  add_citation(r, "n-plus-k-projected-points-on-cubics");
  if (n == 4 && k == 3) add_citation(r, "seven-projected-points-in-p4");
  return r;
}

Report cmd_cremona(const std::string& text, const RunConfig& cfg) {
  Report r = start("cremona " + text, cfg);
  const auto mc = cfg.monte_carlo();
  const P3System s = P3System::from_spec(parse_system(text));
  const auto chain = cremona_reduce(s);
  json states = json::array();
  for (const auto& st : chain.states) states.push_back(to_string(st.to_spec()));
  json ks = json::array();
  for (const auto& st : chain.steps) ks.push_back(st.k);
  r.results["chain"] = states;
  r.results["k"] = ks;
  r.results["reduced"] = to_string(chain.reduced.to_spec());
  r.results["clamped"] = chain.clamped;
  const long d0 = generic_dim(s.to_spec(), mc).measured_dim;
  const long d1 = generic_dim(chain.reduced.to_spec(), mc).measured_dim;
  r.results["dim_start"] = d0;
  r.results["dim_end"] = d1;
  add_citation(r, "cremona-invariance-of-dimension");
  if (chain.clamped) {
    r.warnings.push_back("a multiplicity went negative and was clamped to 0; dimensions need not agree");
  } else if (d0 != d1) {
    check_failed(r, "dimension changed along the chain");
  }
  return r;
}

Report cmd_lift(int n, int t, const RunConfig& cfg) {
  Report r = start("lift " + std::to_string(n) + " " + std::to_string(t), cfg);
  const auto mc = cfg.monte_carlo();
  const auto seed = mc.seeds.front();
  const WConfig w = sample_W(n, t, mc.field, seed);
  const auto pts = lift_preimage(w, mc.field, seed);
  const LiftCheck chk = verify_lift(pts, w, mc.field);
  r.results = {{"n", n},
               {"t", t},
               {"scalars_drawn", w.scalars_drawn},
               {"expected_parameters", n * (t - 1) + t - 2},
               {"points", pts},
               {"verification", chk.ok}};
  if (!chk.ok) check_failed(r, chk.diagnostic);
  return r;
}

Report cmd_verify(const std::vector<std::string>& ids, const RunConfig& cfg) {
  std::string cmd = "verify";
  for (const auto& id : ids) cmd += " " + id;
  Report r = start(cmd, cfg);
  auto results = run_acceptance(ids, cfg);
  std::sort(results.begin(), results.end(), [](const CriterionResult& a, const CriterionResult& b) {
    return std::stoi(a.id.substr(2)) < std::stoi(b.id.substr(2));
  });
  json arr = json::array();
  int failed = 0;
  for (const auto& c : results) {
    arr.push_back(to_json(c));
    if (!c.pass) ++failed;
  }
  r.results["criteria"] = arr;
  r.results["passed"] = static_cast<int>(results.size()) - failed;
  r.results["failed"] = failed;
  if (failed) check_failed(r, std::to_string(failed) + " acceptance criteria failed");
  return r;
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInput*>(&e) ||
      dynamic_cast<const ConfigError*>(&e))
    return 2;
  if (dynamic_cast<const NumericalAbort*>(&e)) return 3;
  return 1;
}

namespace {

Report run_guarded(const std::string& command, const RunConfig& cfg, const std::function<Report()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Report r;
    r.command = command;
    try {
      r.config = cfg.to_json();
    } catch (const std::exception&) {
      r.config = json::object();
    }
    r.status = "error";
    r.error = e.what();
    r.exit_code = exit_code_for(e);
    return r;
  }
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    auto v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad ") + what + " '" + s + "'");
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of fat-point linear systems and limits of colliding fat points"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string prime_text = std::to_string(kMersenne61);
  std::vector<std::string> seed_texts;
  RunConfig cfg;
  int max_degree = -1;
  std::string format = "json";
  app.add_option("--prime", prime_text, "prime modulus (< 2^62)")->capture_default_str();
  app.add_option("--seed", seed_texts, "random seed, repeatable");
  app.add_option("--trials", cfg.trials, "number of independent trials")->capture_default_str();
  app.add_option("--max-degree", max_degree, "maximal degree D for flat limits (default: automatic)");
  app.add_option("--jet-degree", cfg.jet_degree, "degree of the colliding sections in t")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::function<Report()> action;
  std::string command;

  std::string spec_text;
  auto* dim = app.add_subcommand("dim", "dimension of a linear system, e.g. \"L(2,4;2^5)\"");
  dim->add_option("spec", spec_text, "L(n,d;m^e,...) or Q(a,b;m^e,...)")->required();
  dim->callback([&] {
    command = "dim " + spec_text;
    action = [&] { return cmd_dim(spec_text, cfg); };
  });

  int n = 0, k = 0;
  std::string mults;
  CollideFlags flags;
  auto* collide = app.add_subcommand("collide", "limit of fat points colliding at the origin of A^n");
  collide->add_option("n", n, "dimension of the affine space")->required();
  collide->add_option("multiplicities", mults, "e.g. 2,2,2 or 2^3,1^4")->required();
  collide->add_flag("--classify", flags.classify, "rule-based prediction (default)");
  collide->add_flag("--measure", flags.measure, "measure the flat limit");
  collide->add_flag("--compare", flags.compare, "compare with the tangent-line candidate (implies --measure)");
  collide->callback([&] {
    command = "collide " + std::to_string(n) + " " + mults;
    action = [&] { return cmd_collide(n, mults, flags, cfg); };
  });

  auto* conj = app.add_subcommand("conjecture", "rank of n+k projected points on cubics");
  conj->add_option("n", n)->required();
  conj->add_option("k", k)->required();
  conj->callback([&] {
    command = "conjecture " + std::to_string(n) + " " + std::to_string(k);
    action = [&] { return cmd_conjecture(n, k, cfg); };
  });

  auto* crem = app.add_subcommand("cremona", "Cremona reduction of a system on P^3");
  crem->add_option("spec", spec_text, "L(3,d;...)")->required();
  crem->callback([&] {
    command = "cremona " + spec_text;
    action = [&] { return cmd_cremona(spec_text, cfg); };
  });

  int t = 0;
  auto* lift = app.add_subcommand("lift", "sample pairwise projection data and lift it to points of P^(n+1)");
  lift->add_option("n", n)->required();
  lift->add_option("t", t)->required();
  lift->callback([&] {
    command = "lift " + std::to_string(n) + " " + std::to_string(t);
    action = [&] { return cmd_lift(n, t, cfg); };
  });

  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "run acceptance criteria (all, or ids such as AC7)");
  verify->add_option("ids", ids, "criteria to run")->default_val(std::vector<std::string>{"all"});
  verify->callback([&] {
    command = "verify";
    action = [&] { return cmd_verify(ids.empty() ? std::vector<std::string>{"all"} : ids, cfg); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "text" ? Format::text : Format::json;
  if (max_degree >= 0) cfg.max_degree = max_degree;
  Report report = run_guarded(command, cfg, [&] {
    cfg.prime = parse_u64(prime_text, "prime");
    if (!seed_texts.empty()) {
      cfg.seeds.clear();
      for (const auto& s : seed_texts) cfg.seeds.push_back(parse_u64(s, "seed"));
      // with explicit seeds the default trial count follows them
      if (app.count("--trials") == 0) cfg.trials = static_cast<int>(cfg.seeds.size());
    }
    return action();
  });
  report.write(out, cfg.format);
  if (report.status == "error") err << "error: " << report.error << "\n";
  return report.exit_code;
}

}  // namespace fatpoints::cli
