#pragma once

// Inner-loop kernels of the pair scans. Each kernel has a scalar reference
// implementation and, where the CPU supports it, an AVX2 variant selected at
// runtime. The variants perform the same IEEE operations in the same order
// (no fused multiply-add), so their results are bit-identical; the tests
// check this directly.
//
// The override environment variable BEREZIN_SIMD=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <limits>
#include <string_view>

namespace berezin::simd {

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa) noexcept;

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Maximum and the lowest index attaining it. NaN entries are never selected.
struct ArgMax {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = kNoIndex;
};

struct KernelTable {
    Isa isa;
    /// out[i] = sqrt(re^2 + im^2)
    void (*magnitudes)(const std::complex<double>* in, double* out, std::size_t n);
    ArgMax (*argmax)(const double* values, std::size_t n);
    /// argmax of t * forward[i] + (1 - t) * backward[i]
    ArgMax (*weighted_argmax)(const double* forward, const double* backward, double t,
                              std::size_t n);
};

bool supported(Isa isa) noexcept;

/// Kernels for a specific instruction set; throws if it is not supported here.
const KernelTable& table(Isa isa);

/// Kernels chosen at first use (widest supported set unless overridden).
const KernelTable& active() noexcept;

/// Replaces the active selection; used by tests and benchmarks.
void select(Isa isa);

namespace detail {
const KernelTable& scalar_table() noexcept;
#if defined(BEREZIN_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif
}  // namespace detail

}  // namespace berezin::simd
