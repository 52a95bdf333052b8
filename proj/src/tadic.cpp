#include "fatpoints/tadic.hpp"

#include <algorithm>

#include "fatpoints/errors.hpp"
#include "fatpoints/kernels.hpp"

namespace fatpoints {

PolyVector PolyVector::from_entries(const PolyVectorT& entries) {
  PolyVector v(entries.size());
  int deg = -1;
  for (const auto& e : entries) deg = std::max(deg, e.degree());
  v.reserve_blocks(static_cast<std::size_t>(deg + 1));
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& c = entries[j].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) v.set(k, j, c[k]);
  }
  return v;
}

int PolyVector::degree() const noexcept {
  for (std::size_t k = blocks(); k-- > 0;) {
    auto b = block(k);
    if (std::any_of(b.begin(), b.end(), [](std::uint64_t x) { return x != 0; })) return static_cast<int>(k);
  }
  return -1;
}

void PolyVector::reserve_blocks(std::size_t blocks) {
  if (blocks * width_ > coef_.size()) coef_.resize(blocks * width_, 0);
}

void PolyVector::trim() { coef_.resize(static_cast<std::size_t>(degree() + 1) * width_); }

void PolyVector::divide_by_t() {
  if (blocks() == 0) return;
  coef_.erase(coef_.begin(), coef_.begin() + static_cast<std::ptrdiff_t>(width_));
}

void PolyVector::set(std::size_t k, std::size_t j, std::uint64_t c) {
  reserve_blocks(k + 1);
  coef_[k * width_ + j] = c;
}

TAdicEchelon::TAdicEchelon(std::size_t width, const PrimeField& field, std::size_t division_budget)
    : width_(width), field_(field), budget_(division_budget) {}

void TAdicEchelon::insert(PolyVector v) {
  if (v.width() != width_) throw InvalidInput("TAdicEchelon: width mismatch");
  v.trim();
  if (v.is_zero()) throw InternalError("t-saturation: zero vector, input dependent over F_p(t)");
  for (;;) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      std::uint64_t c = v.block(0)[pivots_[i]];
      if (c == 0) continue;
      const PolyVector& s = basis_[i];
      v.reserve_blocks(s.blocks());
      kernels::submul(v.all().subspan(0, s.all().size()), s.all(), c, field_);
    }
    auto head = v.block(0);
    auto nz = std::find_if(head.begin(), head.end(), [](std::uint64_t x) { return x != 0; });
    if (nz != head.end()) {
      std::size_t pivot = static_cast<std::size_t>(nz - head.begin());
      v.trim();
      kernels::scale(v.all(), field_.inv(*nz), field_);
      basis_.push_back(std::move(v));
      pivots_.push_back(pivot);
      return;
    }
    v.trim();
    if (v.is_zero()) throw InternalError("t-saturation: vector vanished, input dependent over F_p(t)");
    v.divide_by_t();
    if (++divisions_ > budget_) {
      throw InternalError("t-saturation: division budget exceeded, input dependent over F_p(t)");
    }
  }
}

MatrixF TAdicEchelon::limit_basis() const {
  MatrixF m(basis_.size(), width_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto b = basis_[i].block(0);
    std::copy(b.begin(), b.end(), m.row(i).begin());
  }
  return m;
}

std::vector<VectorF> t_saturate_and_evaluate(const std::vector<PolyVectorT>& vectors, const PrimeField& field) {
  if (vectors.empty()) return {};
  const std::size_t width = vectors.front().size();
  std::size_t budget = 0;
  for (const auto& v : vectors) {
    if (v.size() != width) throw InvalidInput("t_saturate_and_evaluate: ragged vectors");
    int d = 0;
    for (const auto& e : v) d = std::max(d, e.degree());
    budget += static_cast<std::size_t>(d);
  }
  TAdicEchelon ech(width, field, budget);
  for (const auto& v : vectors) ech.insert(PolyVector::from_entries(v));
  MatrixF lim = ech.limit_basis();
  std::vector<VectorF> out;
  out.reserve(lim.rows());
  for (std::size_t i = 0; i < lim.rows(); ++i) out.emplace_back(lim.row(i).begin(), lim.row(i).end());
  return out;
}

}  // namespace fatpoints
