#include "fatpoints/matrix.hpp"

#include <algorithm>
#include <string>

#include "fatpoints/errors.hpp"
#include "fatpoints/kernels.hpp"

namespace fatpoints {

MatrixF MatrixF::identity(std::size_t n) {
  MatrixF m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixF MatrixF::from_rows(const std::vector<VectorF>& rows, std::size_t cols) {
  MatrixF m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

void MatrixF::append_rows(const MatrixF& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw InvalidInput("append_rows: column mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void MatrixF::append_row(std::span<const std::uint64_t> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InvalidInput("append_row: column mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

MatrixF MatrixF::left_columns(std::size_t cols) const {
  if (cols > cols_) throw InvalidInput("left_columns: too many columns");
  MatrixF m(rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i) std::copy_n(row(i).begin(), cols, m.row(i).begin());
  return m;
}

namespace {

// Forward elimination; when `full` also clears above each pivot.
Echelon eliminate(MatrixF m, const PrimeField& f, bool full) {
  Echelon e;
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    auto prow = m.row(r);
    kernels::scale(prow.subspan(c), f.inv(prow[c]), f);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t factor = m(i, c);
      if (factor == 0) continue;
      kernels::submul(m.row(i).subspan(c), prow.subspan(c), factor, f);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

Echelon row_reduce(MatrixF m, const PrimeField& f) { return eliminate(std::move(m), f, true); }

std::size_t rank(const MatrixF& m, const PrimeField& f) { return eliminate(m, f, false).pivots.size(); }

std::vector<VectorF> kernel(const MatrixF& m, const PrimeField& f) {
  Echelon e = row_reduce(m, f);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<VectorF> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VectorF v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

VectorF apply(const MatrixF& m, std::span<const std::uint64_t> v, const PrimeField& f) {
  if (v.size() != m.cols()) throw InvalidInput("apply: dimension mismatch");
  VectorF out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    auto r = m.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc = f.add(acc, f.mul(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

bool same_row_space(const MatrixF& a, const MatrixF& b, const PrimeField& f) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a, f);
  if (ra != rank(b, f)) return false;
  MatrixF both = a;
  both.append_rows(b);
  return rank(both, f) == ra;
}

// ---------------------------------------------------------------------------

void MatrixT::append_rows(const MatrixT& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw InvalidInput("append_rows: column mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

MatrixT MatrixT::left_columns(std::size_t cols) const {
  if (cols > cols_) throw InvalidInput("left_columns: too many columns");
  MatrixT m(rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
  return m;
}

MatrixF MatrixT::evaluate(std::uint64_t tau, const PrimeField& f) const {
  MatrixF m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(tau, f);
  return m;
}

int MatrixT::max_degree() const noexcept {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

namespace {

TPolynomial content(const std::vector<TPolynomial>& row, const PrimeField& f) {
  TPolynomial g;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    g = gcd(g, e, f);
    if (g.degree() == 0) break;
  }
  return g;
}

void strip_content(std::vector<TPolynomial>& row, const PrimeField& f) {
  TPolynomial g = content(row, f);
  if (g.is_zero()) return;
  if (g.degree() > 0) {
    for (auto& e : row) e = exact_div(e, g, f);
  }
  // first nonzero entry gets a monic leading coefficient
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    std::uint64_t s = f.inv(e.leading());
    for (auto& x : row) x = scale(x, s, f);
    break;
  }
}

void check_cap(const std::vector<TPolynomial>& row, int cap) {
  for (const auto& e : row) {
    if (e.degree() > cap) {
      throw DegreeCapExceeded("t-degree " + std::to_string(e.degree()) + " exceeds cap " + std::to_string(cap) +
                              "; raise t-degree cap");
    }
  }
}

}  // namespace

std::vector<PolyVectorT> kernel_over_fpt(const MatrixT& m, const PrimeField& f, int degree_cap) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (m.max_degree() > degree_cap) {
    throw DegreeCapExceeded("input t-degree exceeds cap; raise t-degree cap");
  }
  std::vector<std::vector<TPolynomial>> a(rows, std::vector<TPolynomial>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      if (best == rows || a[i][c].degree() < a[best][c].degree()) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      TPolynomial g = gcd(a[r][c], a[i][c], f);
      TPolynomial pr = exact_div(a[r][c], g, f);
      TPolynomial pi = exact_div(a[i][c], g, f);
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = sub(mul(pr, a[i][j], f), mul(pi, a[r][j], f), f);
      }
      strip_content(a[i], f);
      check_cap(a[i], degree_cap);
    }
    pivots.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  TPolynomial lcm = TPolynomial::constant(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const TPolynomial& piv = a[i][pivots[i]];
    TPolynomial g = gcd(lcm, piv, f);
    lcm = mul(lcm, exact_div(piv, g, f), f);
    if (lcm.degree() > degree_cap) throw DegreeCapExceeded("pivot lcm exceeds cap; raise t-degree cap");
  }

  std::vector<PolyVectorT> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    PolyVectorT v(cols);
    v[free] = lcm;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const TPolynomial& piv = a[i][pivots[i]];
      TPolynomial factor = exact_div(lcm, piv, f);
      v[pivots[i]] = sub(TPolynomial{}, mul(factor, a[i][free], f), f);
    }
    strip_content(v, f);
    check_cap(v, degree_cap);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fatpoints
