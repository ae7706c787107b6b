#include <cmath>

#include "berezin/simd.hpp"

namespace berezin::simd::detail {

namespace {

void magnitudes(const std::complex<double>* in, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = in[i].real();
        const double im = in[i].imag();
        out[i] = std::sqrt(re * re + im * im);
    }
}

ArgMax argmax(const double* values, std::size_t n) {
    ArgMax best;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > best.value) {
            best.value = values[i];
            best.index = i;
        }
    }
    return best;
}

ArgMax weighted_argmax(const double* forward, const double* backward, double t, std::size_t n) {
    const double u = 1.0 - t;
    ArgMax best;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = t * forward[i] + u * backward[i];
        if (v > best.value) {
            best.value = v;
            best.index = i;
        }
    }
    return best;
}

constexpr KernelTable kScalar{Isa::scalar, &magnitudes, &argmax, &weighted_argmax};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace berezin::simd::detail
