#include "fatpoints/conditions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

// Exponents of total degree exactly k, x_1 power descending.
void degree_slice(int n, int k, std::vector<Exponent>& out) {
  Exponent e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      rec(var + 1, left - a);
    }
    e[var] = 0;
  };
  if (n == 0) {
    if (k == 0) out.push_back(e);
    return;
  }
  rec(0, k);
}

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Pascal triangle mod p up to row `n`.
std::vector<std::vector<std::uint64_t>> pascal(int n, const PrimeField& f) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = f.add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

int max_exponent(const MonomialBasis& basis) {
  int mx = 0;
  for (const auto& e : basis.exponents())
    for (int v : e) mx = std::max(mx, v);
  return mx;
}

}  // namespace

std::vector<Exponent> monomials_up_to(int n, int d) {
  std::vector<Exponent> out;
  for (int k = 0; k <= d; ++k) degree_slice(n, k, out);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

MonomialBasis MonomialBasis::affine(int n, int d) {
  if (n < 1 || d < 0) throw InvalidInput("monomial basis needs n >= 1 and d >= 0");
  MonomialBasis b;
  b.ambient_ = Ambient::affine;
  b.vars_ = n;
  b.degree_ = d;
  b.exps_ = monomials_up_to(n, d);
  for (std::size_t i = 0; i < b.exps_.size(); ++i) b.index_.emplace(b.exps_[i], i);
  return b;
}

MonomialBasis MonomialBasis::projective(int n, int d) {
  MonomialBasis b = affine(n, d);
  b.ambient_ = Ambient::projective;
  return b;
}

MonomialBasis MonomialBasis::biprojective(int a, int b) {
  if (a < 0 || b < 0) throw InvalidInput("bidegree must be nonnegative");
  MonomialBasis m;
  m.ambient_ = Ambient::biprojective;
  m.vars_ = 2;
  m.degree_ = a + b;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) m.exps_.push_back({i, j});
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.index_.emplace(m.exps_[i], i);
  return m;
}

std::size_t MonomialBasis::prefix_size(int d) const {
  if (ambient_ == Ambient::biprojective) throw InvalidInput("prefix_size: no degree filtration on P1xP1 basis");
  if (d < 0) return 0;
  d = std::min(d, degree_);
  return static_cast<std::size_t>(binomial(vars_ + d, vars_));
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InvalidInput("exponent not in monomial basis");
  return it->second;
}

OriginLine::OriginLine(std::vector<std::uint64_t> direction, const PrimeField& field) : dir_(std::move(direction)) {
  auto nz = std::find_if(dir_.begin(), dir_.end(), [](std::uint64_t x) { return x != 0; });
  if (nz == dir_.end()) throw InvalidInput("line direction is zero");
  std::uint64_t s = field.inv(*nz);
  for (auto& x : dir_) x = field.mul(x, s);
}

MatrixF fat_point_rows(const FatPoint& q, const MonomialBasis& basis, const PrimeField& field) {
  const int n = basis.variables();
  if (static_cast<int>(q.coords.size()) != n) throw InvalidInput("fat point has wrong number of coordinates");
  if (q.multiplicity < 1) throw InvalidInput("multiplicity must be positive");
  field.require_exceeds(basis.degree(), "fat point conditions");
  const int top = max_exponent(basis);
  auto c = pascal(top, field);
  // pw[i][e] = q_i^e
  std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pw[i].assign(static_cast<std::size_t>(top) + 1, 1);
    for (int e = 1; e <= top; ++e) pw[i][e] = field.mul(pw[i][e - 1], q.coords[i]);
  }
  auto alphas = monomials_up_to(n, q.multiplicity - 1);
  MatrixF rows(alphas.size(), basis.size());
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    const Exponent& a = alphas[r];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Exponent& b = basis[j];
      std::uint64_t v = 1;
      for (int i = 0; i < n && v != 0; ++i) {
        if (b[i] < a[i]) {
          v = 0;
          break;
        }
        v = field.mul(v, field.mul(c[b[i]][a[i]], pw[i][b[i] - a[i]]));
      }
      rows(r, j) = v;
    }
  }
  return rows;
}

MatrixF line_jet_rows(const OriginLine& line, int s, const MonomialBasis& basis, const PrimeField& field) {
  if (s < 1) throw InvalidInput("jet order must be positive");
  const int n = basis.variables();
  const auto& u = line.direction();
  if (static_cast<int>(u.size()) != n) throw InvalidInput("line direction has wrong dimension");
  field.require_exceeds(basis.degree(), "line jet conditions");
  MatrixF rows(static_cast<std::size_t>(s), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Exponent& b = basis[j];
    int k = total(b);
    if (k >= s) continue;
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v = field.mul(v, field.pow(u[i], static_cast<std::uint64_t>(b[i])));
    rows(static_cast<std::size_t>(k), j) = v;
  }
  return rows;
}

MatrixT moving_fat_point_rows(const std::vector<TPolynomial>& sigma, int m, const MonomialBasis& basis,
                              const PrimeField& field) {
  const int n = basis.variables();
  if (static_cast<int>(sigma.size()) != n) throw InvalidInput("section has wrong number of coordinates");
  if (m < 1) throw InvalidInput("multiplicity must be positive");
  for (const auto& s : sigma) {
    if (s.coeff(0) != 0) throw InvalidInput("section does not pass through the origin at t = 0");
  }
  field.require_exceeds(basis.degree(), "moving fat point conditions");
  const int top = max_exponent(basis);
  auto c = pascal(top, field);
  // sigma^gamma for every gamma of degree <= basis degree
  std::vector<std::vector<TPolynomial>> pw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pw[i].assign(static_cast<std::size_t>(top) + 1, TPolynomial::constant(1));
    for (int e = 1; e <= top; ++e) pw[i][e] = mul(pw[i][e - 1], sigma[i], field);
  }
  std::map<Exponent, TPolynomial> cache;
  auto sigma_pow = [&](const Exponent& g) -> const TPolynomial& {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    TPolynomial p = TPolynomial::constant(1);
    for (int i = 0; i < n; ++i) {
      if (g[i] > 0) p = mul(p, pw[i][g[i]], field);
    }
    return cache.emplace(g, std::move(p)).first->second;
  };

  auto alphas = monomials_up_to(n, m - 1);
  MatrixT rows(alphas.size(), basis.size());
  Exponent g(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    const Exponent& a = alphas[r];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Exponent& b = basis[j];
      std::uint64_t coef = 1;
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (b[i] < a[i]) {
          ok = false;
          break;
        }
        g[i] = b[i] - a[i];
        coef = field.mul(coef, c[b[i]][a[i]]);
      }
      if (!ok) continue;
      rows(r, j) = scale(sigma_pow(g), coef, field);
    }
  }
  return rows;
}

MatrixF form_evaluation_rows(const std::vector<std::vector<std::uint64_t>>& points, int k, const PrimeField& field) {
  if (points.empty()) return MatrixF();
  const int n = static_cast<int>(points.front().size());
  std::vector<Exponent> slice;
  degree_slice(n, k, slice);
  MatrixF rows(points.size(), slice.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (static_cast<int>(points[r].size()) != n) throw InvalidInput("form_evaluation_rows: ragged points");
    for (std::size_t j = 0; j < slice.size(); ++j) {
      std::uint64_t v = 1;
      for (int i = 0; i < n; ++i) v = field.mul(v, field.pow(points[r][i], static_cast<std::uint64_t>(slice[j][i])));
      rows(r, j) = v;
    }
  }
  return rows;
}

int origin_order(std::span<const std::uint64_t> coeffs, const MonomialBasis& basis) {
  if (coeffs.size() > basis.size()) throw InvalidInput("origin_order: too many coefficients");
  int best = -1;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    int k = total(basis[j]);
    if (best < 0 || k < best) best = k;
  }
  return best;
}

}  // namespace fatpoints
