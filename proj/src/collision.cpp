#include "fatpoints/collision.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fatpoints/errors.hpp"

namespace fatpoints {

long CollisionSpec::total_degree() const {
  long s = 0;
  for (int m : mults) s += static_cast<long>(binomial(m + n - 1, n));
  return s;
}

std::vector<std::vector<std::uint64_t>> pair_directions(const std::vector<std::vector<std::uint64_t>>& v,
                                                        const PrimeField& field) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      std::vector<std::uint64_t> d(v[i].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = field.sub(v[i][k], v[j][k]);
      out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> random_vector(int n, const PrimeField& field, std::mt19937_64& rng) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = field.random(rng);
  return v;
}

}  // namespace

CandidateScheme general_candidate(int n, int t, int s, const PrimeField& field, std::mt19937_64& rng) {
  if (n < 1 || t < 1 || s < 1) throw InvalidInput("general_candidate needs n, t, s >= 1");
  CandidateScheme c;
  c.config = LineConfig::general;
  for (int i = 0; i < t; ++i) {
    std::vector<std::uint64_t> u;
    do u = random_vector(n, field, rng);
    while (std::all_of(u.begin(), u.end(), [](std::uint64_t x) { return x == 0; }));
    c.lines.emplace_back(std::move(u), field);
    c.jet_orders.push_back(s);
  }
  return c;
}

CandidateScheme projected_pairs_candidate(int n, int m, int s, const PrimeField& field, std::mt19937_64& rng) {
  if (n < 1 || m < 2 || s < 1) throw InvalidInput("projected_pairs_candidate needs n >= 1, m >= 2, s >= 1");
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::vector<std::uint64_t>> pts;
    for (int i = 0; i < m; ++i) pts.push_back(random_vector(n, field, rng));
    auto dirs = pair_directions(pts, field);
    try {
      CandidateScheme c;
      c.config = LineConfig::projected_pairs;
      c.pairs_of = m;
      for (auto& d : dirs) {
        c.lines.emplace_back(std::move(d), field);
        c.jet_orders.push_back(s);
      }
      return c;
    } catch (const InvalidInput&) {
      // two sampled points coincided
    }
  }
  throw NumericalAbort("projected_pairs_candidate: degenerate samples");
}

const char* to_string(DescriptionKind k) noexcept {
  switch (k) {
    case DescriptionKind::m_tuple_point:
      return "MTuplePoint";
    case DescriptionKind::triple_with_directions:
      return "TripleWithDirections";
    case DescriptionKind::fat_plus_simple_directions:
      return "FatPlusSimpleDirections";
    case DescriptionKind::unclassified:
      return "Unclassified";
  }
  return "?";
}

std::string to_string(const LimitDescription& d) {
  std::string name = to_string(d.kind);
  switch (d.kind) {
    case DescriptionKind::m_tuple_point:
      return name + "(" + std::to_string(d.m) + ")";
    case DescriptionKind::triple_with_directions:
      return name + "(" + std::to_string(d.t) + ", projected-pairs(" + std::to_string(d.pairs_of) + "))";
    case DescriptionKind::fat_plus_simple_directions:
      return name + "(" + std::to_string(d.m) + ", " + std::to_string(d.t) + ")";
    case DescriptionKind::unclassified:
      return name;
  }
  return name;
}

int limit_multiplicity(const CollisionSpec& spec, const MonteCarlo& mc) {
  if (spec.n < 1) throw InvalidInput("ambient dimension must be >= 1");
  if (spec.mults.empty()) throw InvalidInput("collision needs at least one point");
  if (spec.n == 1) return std::accumulate(spec.mults.begin(), spec.mults.end(), 0);
  return min_nonzero_degree(spec.n, spec.mults, mc);
}

bool n_plus_k_in_range(int n, int k) { return k >= 1 && 6 * k < n * n - n + 6 && !(n == 4 && k == 3); }

namespace {

long binom(int a, int b) { return static_cast<long>(binomial(a, b)); }

// Degree of the described scheme; the triple-point branch uses the
// conjectured rank of the projected pairs on cubics.
long description_degree(const LimitDescription& d, int n) {
  switch (d.kind) {
    case DescriptionKind::m_tuple_point:
      return binom(d.m + n - 1, n);
    case DescriptionKind::fat_plus_simple_directions:
      return binom(d.m + n - 1, n) + d.t;
    case DescriptionKind::triple_with_directions: {
      int k = d.pairs_of - n;
      return binom(n + 2, n) + d.t - (k >= 3 ? binom(k - 1, 2) : 0);
    }
    case DescriptionKind::unclassified:
      return 0;
  }
  return 0;
}

int count_of(const std::vector<int>& v, int x) { return static_cast<int>(std::count(v.begin(), v.end(), x)); }

std::string degree_match_citation(int n, const std::vector<int>& m) {
  const int h = static_cast<int>(m.size());
  const int top = m.front();
  const int simple = count_of(m, 1);
  if (count_of(m, 2) == h) return "doubles-collapse-to-fat-point";
  if (n == 3 && top >= 2 && count_of(m, top) == 8 && simple == top + 1 && h == 8 + top + 1)
    return "eight-fat-points-plus-simple-points-in-p3";
  if (n == 4 && count_of(m, 3) == 6 && simple == 36 && h == 42) return "six-triple-points-plus-simple-points-in-p4";
  if (top >= 2 && simple == h - 1 && simple >= 1) return "fat-point-plus-simple-points";
  if (h >= 3 && m[1] >= 2 && simple == h - 2) return "two-fat-points-plus-simple-points";
  if ((n == 2 || n == 3) && count_of(m, top) == h) return "equal-fat-points-collapse";
  return "degree-match-empty-system";
}

}  // namespace

LimitPrediction classify_limit(const CollisionSpec& spec_in, const MonteCarlo& mc) {
  CollisionSpec spec = spec_in;
  if (spec.n < 1) throw InvalidInput("ambient dimension must be >= 1");
  if (spec.mults.empty()) throw InvalidInput("collision needs at least one point");
  for (int m : spec.mults) {
    if (m < 1) throw InvalidInput("multiplicities must be positive");
  }
  std::sort(spec.mults.begin(), spec.mults.end(), std::greater<>());
  const int n = spec.n;
  const auto& m = spec.mults;
  const int h = static_cast<int>(m.size());
  const long total = spec.total_degree();

  LimitPrediction p;
  p.degree = total;
  auto finish = [&](LimitDescription d, std::string cite) {
    p.description = d;
    p.citation = std::move(cite);
    p.multiplicity = d.m;
    long dd = description_degree(d, n);
    if (dd != total) {
      throw InternalError("rule " + p.citation + " predicts degree " + std::to_string(dd) + " but the family has " +
                          std::to_string(total));
    }
    return p;
  };

  if (n == 1) {
    return finish({DescriptionKind::m_tuple_point, static_cast<int>(total), 0, 0}, "points-on-a-line");
  }
  if (h == 1) return finish({DescriptionKind::m_tuple_point, m[0], 0, 0}, "single-point");

  // equal degree: a (j+1)-fold point has degree C(j+n, n)
  for (int j = 0; binom(j + n, n) <= total; ++j) {
    if (binom(j + n, n) != total) continue;
    long dim = generic_dim(SystemSpec::projective(n, j, m), mc).measured_dim;
    if (dim == 0) {
      return finish({DescriptionKind::m_tuple_point, j + 1, 0, 0}, degree_match_citation(n, m));
    }
    p.diagnostics.push_back("degree matches a " + std::to_string(j + 1) + "-fold point but L_{" + std::to_string(n) +
                            "," + std::to_string(j) + "} has dimension " + std::to_string(dim));
  }

  // one fat point plus doubles
  if (n >= 3 && m[0] >= 3 && h >= 2 && count_of(m, 2) == h - 1) {
    const int mm = m[0];
    const long dirs = binom(mm + n - 1, n - 1);
    if (dirs % n == 0 && dirs / n == h - 1 && !(mm == 4 && n == 3) && !(mm == 3 && n == 5)) {
      int mult = min_nonzero_degree(n, m, mc);
      if (mult == mm + 1) {
        return finish({DescriptionKind::fat_plus_simple_directions, mm + 1, h - 1, 0}, "fat-point-plus-doubles");
      }
      p.diagnostics.push_back("fat point plus doubles: expected multiplicity " + std::to_string(mm + 1) +
                              ", measured " + std::to_string(mult));
    }
  }

  // n + k double points
  if (count_of(m, 2) == h && h > n) {
    const int k = h - n;
    if (n_plus_k_in_range(n, k)) {
      int mult = min_nonzero_degree(n, m, mc);
      if (mult == 3) {
        return finish({DescriptionKind::triple_with_directions, 3, static_cast<int>(binom(h, 2)), h},
                      "n-plus-k-doubles-triple-point");
      }
      p.diagnostics.push_back("n+k doubles: expected multiplicity 3, measured " + std::to_string(mult));
    } else {
      p.diagnostics.push_back("n+k doubles with (n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                              ") outside the range of the triple-point description");
    }
  }

  // simple points in the plane, one short of filling degree k
  if (n == 2 && count_of(m, 1) == h) {
    for (int k = 1; binom(k + 2, 2) - 1 <= h; ++k) {
      if (binom(k + 2, 2) - 1 != h) continue;
      int mult = min_nonzero_degree(n, m, mc);
      if (mult == k) {
        return finish({DescriptionKind::fat_plus_simple_directions, k, k, 0}, "plane-simple-points-fat-plus-directions");
      }
      p.diagnostics.push_back("simple points: expected multiplicity " + std::to_string(k) + ", measured " +
                              std::to_string(mult));
    }
  }

  if (n == 3 && h == 5 && count_of(m, 5) == 5) {
    p.warnings.push_back("five quintuple points in P^3: taken as 5^5 (degree 175), not 5^4");
    int mult = min_nonzero_degree(n, m, mc);
    if (mult == 9) {
      return finish({DescriptionKind::fat_plus_simple_directions, 9, 10, 0}, "five-quintuple-points-in-p3");
    }
    p.diagnostics.push_back("five quintuple points: expected multiplicity 9, measured " + std::to_string(mult));
  }

  p.description = {};
  p.citation = "none";
  p.multiplicity = limit_multiplicity(spec, mc);
  p.diagnostics.push_back("no rule applies");
  return p;
}

CandidateHilbert candidate_hilbert(const CandidateScheme& c, int n, int D, const PrimeField& field) {
  if (D < 1) throw InvalidInput("candidate_hilbert needs D >= 1");
  if (c.lines.size() != c.jet_orders.size()) throw InvalidInput("candidate: one jet order per line");
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < c.lines.size(); ++j) {
      if (c.lines[i] == c.lines[j]) throw InvalidInput("candidate lines must be distinct");
    }
  }
  field.require_exceeds(D, "candidate Hilbert function");
  CandidateHilbert out;
  MatrixF prev_rows;
  for (int d = 0; d <= D; ++d) {
    MonomialBasis basis = MonomialBasis::affine(n, d);
    MatrixF rows(0, basis.size());
    for (std::size_t i = 0; i < c.lines.size(); ++i) rows.append_rows(line_jet_rows(c.lines[i], c.jet_orders[i], basis, field));
    long h = static_cast<long>(rank(rows, field));
    out.hilbert.push_back(h);
    if (d > 0 && h == out.hilbert[d - 1]) {
      // colength stays put from here on
      out.hilbert.resize(static_cast<std::size_t>(D) + 1, h);
      out.degree = h;
      out.stabilized_at = d - 1;
      int best = -1;
      for (const auto& v : kernel(rows, field)) {
        int o = origin_order(v, basis);
        if (o >= 0 && (best < 0 || o < best)) best = o;
      }
      out.multiplicity = best;
      return out;
    }
  }
  throw NotStabilized("candidate Hilbert function not stabilized by degree " + std::to_string(D) + "; raise D");
}

RecursiveDegree candidate_degree_recursive(int n, int t) {
  if (n < 1 || t < 1) throw InvalidInput("candidate_degree_recursive needs n, t >= 1");
  auto mult = [n](int s) {
    int m = 0;
    while (m < 4 && binom(n - 1 + m, n - 1) <= s) ++m;
    return m;
  };
  RecursiveDegree r;
  long deg = 4;
  for (int s = 1; s <= t; ++s) {
    if (s > 1) deg += 4 - mult(s - 1);
    r.degree_path.push_back(deg);
    r.multiplicity_path.push_back(mult(s));
  }
  r.degree = deg;
  r.multiplicity = r.multiplicity_path.back();
  return r;
}

std::optional<DegreeMult> projected_pairs_degree(int n, int m) {
  if (n < 1 || m < 2) return std::nullopt;
  if (m == 2) return DegreeMult{4, 1};
  if (m <= n) return DegreeMult{static_cast<long>(m) * m, 1};
  int k = m - n;
  if (n_plus_k_in_range(n, k)) return DegreeMult{static_cast<long>(n + 1) * (n + k), 3};
  return std::nullopt;
}

long infinitely_near_degree(int n, int m, long h0_B) {
  if (n < 1 || m < 0) throw InvalidInput("infinitely_near_degree needs n >= 1, m >= 0");
  if (h0_B < 0 || h0_B > binom(n + m - 1, n - 1)) throw InvalidInput("h0_B outside [0, C(n+m-1, n-1)]");
  return binom(n + m, n) - h0_B;
}

Degeneration apply_collision_degeneration(const SystemSpec& spec, const std::vector<int>& subset,
                                          const MonteCarlo& mc) {
  if (spec.p1p1) throw InvalidInput("collision degenerations are defined on P^n only");
  Degeneration out;
  out.result = spec;
  if (subset.empty()) return out;
  std::vector<int> rest = spec.mults;
  for (int x : subset) {
    auto it = std::find(rest.begin(), rest.end(), x);
    if (it == rest.end()) throw InvalidInput("subset is not contained in the system's multiplicities");
    rest.erase(it);
  }
  out.prediction = classify_limit(CollisionSpec{spec.n, subset}, mc);
  const auto& d = out.prediction.description;
  switch (d.kind) {
    case DescriptionKind::m_tuple_point:
      break;
    case DescriptionKind::fat_plus_simple_directions:
      out.warnings.push_back(std::to_string(d.t) + " infinitely near simple directions dropped");
      break;
    default:
      throw InvalidInput("limit " + to_string(d) + " cannot be written as a fat point");
  }
  rest.push_back(d.m);
  out.result = SystemSpec::projective(spec.n, spec.d, rest);
  return out;
}

}  // namespace fatpoints
