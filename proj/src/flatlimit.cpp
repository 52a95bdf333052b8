#include "fatpoints/flatlimit.hpp"

#include <algorithm>
#include <random>

#include "fatpoints/errors.hpp"
#include "fatpoints/kernels.hpp"
#include "fatpoints/tadic.hpp"

namespace fatpoints {

namespace {

std::vector<std::uint64_t> section_at(const std::vector<TPolynomial>& s, std::uint64_t tau, const PrimeField& f) {
  std::vector<std::uint64_t> p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p[i] = s[i].eval(tau, f);
  return p;
}

bool family_degenerate(const CollisionFamily& fam, const PrimeField& field, std::mt19937_64& rng) {
  for (const auto& s : fam.sections) {
    if (std::all_of(s.begin(), s.end(), [](const TPolynomial& x) { return x.coeff(1) == 0; })) return true;
  }
  for (std::size_t i = 0; i < fam.sections.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.sections.size(); ++j) {
      bool same_tangent = true;
      for (int k = 0; k < fam.n; ++k) same_tangent &= fam.sections[i][k].coeff(1) == fam.sections[j][k].coeff(1);
      if (same_tangent) return true;
    }
  }
  // collisions away from t = 0 at a few sampled parameters
  for (int trial = 0; trial < 3; ++trial) {
    std::uint64_t tau = field.random_nonzero(rng);
    std::vector<std::vector<std::uint64_t>> pts;
    for (const auto& s : fam.sections) pts.push_back(section_at(s, tau, field));
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return true;
  }
  return false;
}

MatrixT family_rows(const CollisionFamily& fam, const MonomialBasis& basis, const PrimeField& field) {
  MatrixT rows(0, basis.size());
  for (std::size_t i = 0; i < fam.sections.size(); ++i) {
    // conditions of order > degree vanish identically
    int m = std::min(fam.mults[i], basis.degree() + 1);
    rows.append_rows(moving_fat_point_rows(fam.sections[i], m, basis, field));
  }
  return rows;
}

// Indices of rows independent in m, greedily in order.
std::vector<std::size_t> independent_rows(const MatrixF& m, const PrimeField& field) {
  std::vector<VectorF> ech;
  std::vector<std::size_t> piv, chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    VectorF v(m.row(r).begin(), m.row(r).end());
    for (std::size_t i = 0; i < ech.size(); ++i) {
      if (v[piv[i]] != 0) kernels::submul(v, ech[i], v[piv[i]], field);
    }
    auto nz = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (nz == v.end()) continue;
    kernels::scale(v, field.inv(*nz), field);
    piv.push_back(static_cast<std::size_t>(nz - v.begin()));
    ech.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

void finish_piece(LimitPiece& piece, const MonomialBasis& basis, const PrimeField& field) {
  piece.basis = kernel(piece.limit_rows, field);
  piece.min_order = -1;
  for (const auto& v : piece.basis) {
    int o = origin_order(v, basis);
    if (o >= 0 && (piece.min_order < 0 || o < piece.min_order)) piece.min_order = o;
  }
}

}  // namespace

CollisionFamily make_family(const CollisionSpec& spec, int jet_degree, const PrimeField& field, std::uint64_t seed) {
  if (jet_degree < 1) throw InvalidInput("jet degree must be >= 1");
  if (spec.n < 1) throw InvalidInput("ambient dimension must be >= 1");
  if (spec.mults.empty()) throw InvalidInput("family needs at least one point");
  for (int m : spec.mults) {
    if (m < 1) throw InvalidInput("multiplicities must be positive");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    CollisionFamily fam;
    fam.n = spec.n;
    fam.jet_degree = jet_degree;
    fam.mults = spec.mults;
    for (std::size_t i = 0; i < spec.mults.size(); ++i) {
      std::vector<TPolynomial> s;
      for (int k = 0; k < spec.n; ++k) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(jet_degree) + 1, 0);
        for (int e = 1; e <= jet_degree; ++e) c[e] = field.random(rng);
        s.emplace_back(std::move(c));
      }
      fam.sections.push_back(std::move(s));
    }
    if (!family_degenerate(fam, field, rng)) return fam;
  }
  throw NumericalAbort("make_family: degenerate sections after 8 attempts");
}

std::vector<LimitPiece> limit_pieces(const CollisionFamily& f, int D, const PrimeField& field, std::uint64_t seed) {
  if (D < 0) throw InvalidInput("D must be >= 0");
  field.require_exceeds(static_cast<long>(D) * f.jet_degree, "flat limit");
  MonomialBasis full = MonomialBasis::affine(f.n, D);
  MatrixT rows = family_rows(f, full, field);
  std::mt19937_64 rng(seed ^ 0x7a75ULL);
  MatrixF at_tau = rows.evaluate(field.random_nonzero(rng), field);

  std::vector<LimitPiece> out;
  for (int d = 0; d <= D; ++d) {
    const std::size_t cols = full.prefix_size(d);
    MatrixF head = at_tau.left_columns(cols);
    auto pick = independent_rows(head, field);
    std::vector<PolyVector> vecs;
    std::size_t budget = 0;
    for (std::size_t r : pick) {
      PolyVector v(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& c = rows(r, j).coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) v.set(k, j, c[k]);
      }
      budget += static_cast<std::size_t>(std::max(v.degree(), 0));
      vecs.push_back(std::move(v));
    }
    TAdicEchelon ech(cols, field, budget);
    for (auto& v : vecs) ech.insert(std::move(v));
    LimitPiece piece;
    piece.degree = d;
    piece.rank = pick.size();
    piece.limit_rows = ech.limit_basis();
    piece.divisions = ech.divisions();
    finish_piece(piece, MonomialBasis::affine(f.n, d), field);
    out.push_back(std::move(piece));
  }
  return out;
}

LimitPiece limit_piece_via_kernel(const CollisionFamily& f, int d, const PrimeField& field, int degree_cap) {
  MonomialBasis basis = MonomialBasis::affine(f.n, d);
  MatrixT rows = family_rows(f, basis, field);
  auto ker = kernel_over_fpt(rows, field, degree_cap);
  LimitPiece piece;
  piece.degree = d;
  piece.rank = basis.size() - ker.size();
  if (!ker.empty()) {
    piece.basis = t_saturate_and_evaluate(ker, field);
    // annihilator of the limit piece, for symmetry with the row route
    piece.limit_rows = MatrixF::from_rows(kernel(MatrixF::from_rows(piece.basis, basis.size()), field), basis.size());
  } else {
    piece.limit_rows = MatrixF::identity(basis.size());
  }
  finish_piece(piece, basis, field);
  return piece;
}

std::vector<long> generic_hilbert(const CollisionFamily& f, int D, const PrimeField& field, std::uint64_t seed) {
  MonomialBasis full = MonomialBasis::affine(f.n, D);
  std::mt19937_64 rng(seed ^ 0x6e6eULL);
  std::uint64_t tau = field.random_nonzero(rng);
  MatrixF rows(0, full.size());
  for (std::size_t i = 0; i < f.sections.size(); ++i) {
    FatPoint q{section_at(f.sections[i], tau, field), std::min(f.mults[i], D + 1)};
    rows.append_rows(fat_point_rows(q, full, field));
  }
  std::vector<long> h;
  for (int d = 0; d <= D; ++d) h.push_back(static_cast<long>(rank(rows.left_columns(full.prefix_size(d)), field)));
  return h;
}

int auto_degree(const CollisionFamily& f, const PrimeField& field, std::uint64_t seed) {
  const long total = f.total_degree();
  for (int d = 0;; ++d) {
    // the generic Hilbert function is strictly increasing until it reaches total
    if (static_cast<long>(binomial(f.n + d, f.n)) < total) continue;
    if (generic_hilbert(f, d, field, seed).back() == total) return d + 1;
    if (d > total) throw InternalError("generic Hilbert function never reaches the total degree");
  }
}

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::equal:
      return "equal";
    case Comparison::candidate_strictly_contained:
      return "candidate-strictly-contained";
    case Comparison::incomparable:
      return "incomparable";
    case Comparison::not_checked:
      return "not-checked";
  }
  return "?";
}

LimitReport limit_hilbert(const CollisionFamily& f, std::optional<int> D, const PrimeField& field,
                          std::uint64_t seed) {
  LimitReport r;
  r.D = D ? *D : auto_degree(f, field, seed);
  if (r.D < 1) throw InvalidInput("D must be >= 1");
  r.pieces = limit_pieces(f, r.D, field, seed);
  r.multiplicity = -1;
  for (const auto& p : r.pieces) {
    r.hilbert.push_back(static_cast<long>(binomial(f.n + p.degree, f.n)) - static_cast<long>(p.basis.size()));
    if (p.min_order >= 0 && (r.multiplicity < 0 || p.min_order < r.multiplicity)) r.multiplicity = p.min_order;
  }
  const long total = f.total_degree();
  const long hD = r.hilbert.back();
  const long hD1 = r.hilbert[r.hilbert.size() - 2];
  if (hD != hD1) {
    throw NotStabilized("limit Hilbert function not stabilized at D = " + std::to_string(r.D) + " (h = " +
                        std::to_string(hD1) + ", " + std::to_string(hD) + "); raise D");
  }
  if (hD != total) {
    throw CheckFailure("degree mismatch: limit has degree " + std::to_string(hD) + ", family has " +
                       std::to_string(total) + "; family invalid or prime unlucky");
  }
  r.degree = hD;
  return r;
}

Comparison compare_with_candidate(const LimitReport& report, const CandidateScheme& c, int n, const PrimeField& field) {
  if (c.lines.empty() || c.lines.size() != c.jet_orders.size()) throw InvalidInput("invalid candidate for comparison");
  if (report.pieces.empty()) throw InvalidInput("report has no limit pieces");
  bool strict = false;
  for (const auto& piece : report.pieces) {
    MonomialBasis basis = MonomialBasis::affine(n, piece.degree);
    MatrixF rows(0, basis.size());
    for (std::size_t i = 0; i < c.lines.size(); ++i) rows.append_rows(line_jet_rows(c.lines[i], c.jet_orders[i], basis, field));
    for (const auto& v : piece.basis) {
      auto img = apply(rows, v, field);
      if (std::any_of(img.begin(), img.end(), [](std::uint64_t x) { return x != 0; })) return Comparison::incomparable;
    }
    std::size_t cand_dim = basis.size() - rank(rows, field);
    if (cand_dim != piece.basis.size()) strict = true;
  }
  return strict ? Comparison::candidate_strictly_contained : Comparison::equal;
}

std::vector<std::vector<std::uint64_t>> tangent_directions(const CollisionFamily& f, const PrimeField& field) {
  std::vector<std::vector<std::uint64_t>> v;
  for (const auto& s : f.sections) {
    std::vector<std::uint64_t> d(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) d[k] = s[k].coeff(1);
    v.push_back(std::move(d));
  }
  return pair_directions(v, field);
}

CandidateScheme tangent_candidate(const CollisionFamily& f, const PrimeField& field, int jet_order) {
  CandidateScheme c;
  c.config = LineConfig::projected_pairs;
  c.pairs_of = static_cast<int>(f.sections.size());
  for (auto& d : tangent_directions(f, field)) {
    c.lines.emplace_back(std::move(d), field);
    c.jet_orders.push_back(jet_order);
  }
  return c;
}

}  // namespace fatpoints
