#pragma once

// Row kernels for modular elimination.
//
// Every kernel has a portable scalar reference. For the default Mersenne
// field an AVX2 variant is compiled in a separate translation unit and
// selected at runtime when the CPU reports AVX2. Both variants produce
// bit-identical output; tests/test_kernels.cpp checks that.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "fatpoints/field.hpp"

namespace fatpoints::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;

/// dst[i] <- dst[i] - c * src[i]  (mod p); src must be at least as long as dst.
void submul(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
            const PrimeField& field);

/// v[i] <- c * v[i]  (mod p)
void scale(std::span<std::uint64_t> v, std::uint64_t c, const PrimeField& field);

/// Variant that submul/scale would run for this field.
Isa selected_isa(const PrimeField& field) noexcept;

/// Whether the running CPU and the build support the AVX2 kernels.
bool avx2_available() noexcept;

/// Pins dispatch to one variant (nullopt restores automatic selection).
/// The FATPOINTS_KERNEL=scalar environment variable has the same effect at startup.
void force_isa(std::optional<Isa> isa) noexcept;

namespace scalar {
void submul(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
            const PrimeField& field) noexcept;
void scale(std::uint64_t* v, std::uint64_t c, std::size_t n, const PrimeField& field) noexcept;
}  // namespace scalar

namespace avx2 {
// Mersenne-61 field only.
void submul_m61(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n) noexcept;
void scale_m61(std::uint64_t* v, std::uint64_t c, std::size_t n) noexcept;
}  // namespace avx2

}  // namespace fatpoints::kernels
