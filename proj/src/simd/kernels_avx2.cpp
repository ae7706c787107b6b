// Compiled with -mavx2 only; reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <cmath>

#include "berezin/simd.hpp"

namespace berezin::simd::detail {

namespace {

void magnitudes(const std::complex<double>* in, double* out, std::size_t n) {
    const auto* raw = reinterpret_cast<const double*>(in);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d lo = _mm256_loadu_pd(raw + 2 * i);      // re0 im0 re1 im1
        const __m256d hi = _mm256_loadu_pd(raw + 2 * i + 4);  // re2 im2 re3 im3
        // hadd gives |z0|^2 |z2|^2 |z1|^2 |z3|^2, each summed as re*re + im*im
        const __m256d sums = _mm256_hadd_pd(_mm256_mul_pd(lo, lo), _mm256_mul_pd(hi, hi));
        const __m256d ordered = _mm256_permute4x64_pd(sums, 0xD8);
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(ordered));
    }
    for (; i < n; ++i) {
        const double re = in[i].real();
        const double im = in[i].imag();
        out[i] = std::sqrt(re * re + im * im);
    }
}

// Lane-wise running maximum with strict comparison keeps the first index per
// lane; the horizontal step then takes the lowest index among tied lanes,
// reproducing the scalar first-occurrence rule.
struct LaneBest {
    __m256d value = _mm256_set1_pd(-INFINITY);
    __m256d index = _mm256_set1_pd(-1.0);
    __m256d next = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);

    void update(__m256d v) {
        const __m256d better = _mm256_cmp_pd(v, value, _CMP_GT_OQ);
        value = _mm256_blendv_pd(value, v, better);
        index = _mm256_blendv_pd(index, next, better);
        next = _mm256_add_pd(next, _mm256_set1_pd(4.0));
    }

    ArgMax reduce() const {
        alignas(32) double values[4];
        alignas(32) double indices[4];
        _mm256_store_pd(values, value);
        _mm256_store_pd(indices, index);
        ArgMax best;
        for (int lane = 0; lane < 4; ++lane) {
            if (indices[lane] < 0.0) continue;
            const auto idx = static_cast<std::size_t>(indices[lane]);
            if (values[lane] > best.value || (values[lane] == best.value && idx < best.index)) {
                best.value = values[lane];
                best.index = idx;
            }
        }
        return best;
    }
};

ArgMax argmax(const double* values, std::size_t n) {
    LaneBest lanes;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) lanes.update(_mm256_loadu_pd(values + i));
    ArgMax best = lanes.reduce();
    for (; i < n; ++i) {
        if (values[i] > best.value) {
            best.value = values[i];
            best.index = i;
        }
    }
    return best;
}

ArgMax weighted_argmax(const double* forward, const double* backward, double t, std::size_t n) {
    const double u = 1.0 - t;
    const __m256d tv = _mm256_set1_pd(t);
    const __m256d uv = _mm256_set1_pd(u);
    LaneBest lanes;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d f = _mm256_mul_pd(tv, _mm256_loadu_pd(forward + i));
        const __m256d b = _mm256_mul_pd(uv, _mm256_loadu_pd(backward + i));
        lanes.update(_mm256_add_pd(f, b));
    }
    ArgMax best = lanes.reduce();
    for (; i < n; ++i) {
        const double v = t * forward[i] + u * backward[i];
        if (v > best.value) {
            best.value = v;
            best.index = i;
        }
    }
    return best;
}

constexpr KernelTable kAvx2{Isa::avx2, &magnitudes, &argmax, &weighted_argmax};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace berezin::simd::detail
