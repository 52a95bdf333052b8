#include "fatpoints/kernels.hpp"

namespace fatpoints::kernels::scalar {

void submul(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
            const PrimeField& field) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = field.sub(dst[i], field.mul(c, src[i]));
  }
}

void scale(std::uint64_t* v, std::uint64_t c, std::size_t n, const PrimeField& field) noexcept {
  for (std::size_t i = 0; i < n; ++i) v[i] = field.mul(c, v[i]);
}

}  // namespace fatpoints::kernels::scalar
