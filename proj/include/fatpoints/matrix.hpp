#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/field.hpp"
#include "fatpoints/tpoly.hpp"

namespace fatpoints {

using VectorF = std::vector<std::uint64_t>;

/// Dense row-major matrix over F_p.
class MatrixF {
 public:
  MatrixF() = default;
  MatrixF(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static MatrixF identity(std::size_t n);
  static MatrixF from_rows(const std::vector<VectorF>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  /// Appends the rows of `other`; column counts must match.
  void append_rows(const MatrixF& other);
  void append_row(std::span<const std::uint64_t> r);
  /// Keeps the first `cols` columns.
  MatrixF left_columns(std::size_t cols) const;

  bool operator==(const MatrixF&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form computed in place.
struct Echelon {
  MatrixF reduced;                   // first `pivots.size()` rows are the nonzero RREF rows
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(MatrixF m, const PrimeField& f);

std::size_t rank(const MatrixF& m, const PrimeField& f);

/// Basis of the right kernel. Vector j has a 1 in the j-th free column and a
/// 0 in every other free column.
std::vector<VectorF> kernel(const MatrixF& m, const PrimeField& f);

/// m * v
VectorF apply(const MatrixF& m, std::span<const std::uint64_t> v, const PrimeField& f);

/// rank(span(a) + span(b)) == rank(a) == rank(b)
bool same_row_space(const MatrixF& a, const MatrixF& b, const PrimeField& f);

/// Dense matrix over F_p[t].
class MatrixT {
 public:
  MatrixT() = default;
  MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  TPolynomial& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const TPolynomial& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  void append_rows(const MatrixT& other);
  MatrixT left_columns(std::size_t cols) const;
  MatrixF evaluate(std::uint64_t tau, const PrimeField& f) const;
  int max_degree() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TPolynomial> data_;
};

using PolyVectorT = std::vector<TPolynomial>;

/// Basis of the kernel over the fraction field F_p(t), each vector cleared
/// to polynomial entries without common factor. Elimination is fraction-free
/// with content stripping after each pivot; throws DegreeCapExceeded when an
/// intermediate entry passes `degree_cap`.
std::vector<PolyVectorT> kernel_over_fpt(const MatrixT& m, const PrimeField& f, int degree_cap);

}  // namespace fatpoints
