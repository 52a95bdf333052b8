#pragma once

// Limits of subspaces as t -> 0.
//
// A family of subspaces spanned by vectors with entries in F_p[t] has a
// limit in the Grassmannian. It is the reduction mod t of the saturated
// F_p[[t]]-lattice spanned by the vectors. TAdicEchelon builds that lattice
// incrementally: a new vector is reduced against the t = 0 values of the
// vectors already accepted, using constant coefficients only, and divided
// by t whenever its t = 0 value becomes dependent. Neither step raises the
// t-degree, so vectors never grow past the input degree.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/field.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

/// Vector over F_p[t] stored by t-degree: block k holds every entry's t^k coefficient.
class PolyVector {
 public:
  explicit PolyVector(std::size_t width) : width_(width) {}
  static PolyVector from_entries(const PolyVectorT& entries);

  std::size_t width() const noexcept { return width_; }
  std::size_t blocks() const noexcept { return width_ == 0 ? 0 : coef_.size() / width_; }
  /// Highest t-degree with a nonzero coefficient; -1 for the zero vector.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  std::span<std::uint64_t> block(std::size_t k) noexcept { return {coef_.data() + k * width_, width_}; }
  std::span<const std::uint64_t> block(std::size_t k) const noexcept {
    return {coef_.data() + k * width_, width_};
  }
  std::span<std::uint64_t> all() noexcept { return coef_; }
  std::span<const std::uint64_t> all() const noexcept { return coef_; }

  /// Makes room for t-degree < blocks (new blocks are zero).
  void reserve_blocks(std::size_t blocks);
  /// Drops zero top blocks.
  void trim();
  /// Requires block 0 to vanish.
  void divide_by_t();
  void set(std::size_t k, std::size_t j, std::uint64_t c);

 private:
  std::size_t width_;
  std::vector<std::uint64_t> coef_;
};

class TAdicEchelon {
 public:
  /// `division_budget` bounds the total number of divisions by t; exceeding
  /// it means the inputs were dependent over F_p(t).
  TAdicEchelon(std::size_t width, const PrimeField& field, std::size_t division_budget);

  /// Inserts a vector independent over F_p(t) of those already inserted.
  /// Throws InternalError on a dependent input (zero vector or budget exceeded).
  void insert(PolyVector v);

  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t divisions() const noexcept { return divisions_; }

  /// Values at t = 0 of the saturated basis; they are independent.
  MatrixF limit_basis() const;

 private:
  std::size_t width_;
  PrimeField field_;
  std::size_t budget_;
  std::size_t divisions_ = 0;
  std::vector<PolyVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of lim_{t->0} span(V). V must be independent over F_p(t); the output
/// has |V| vectors, independent over F_p. Throws InternalError when the
/// number of divisions by t passes the total t-degree of V.
std::vector<VectorF> t_saturate_and_evaluate(const std::vector<PolyVectorT>& vectors, const PrimeField& field);

}  // namespace fatpoints
