#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "berezin/error.hpp"
#include "berezin/simd.hpp"

namespace berezin::simd {

std::string_view name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(BEREZIN_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!supported(isa)) {
        fail(ErrorCode::configuration,
             "instruction set " + std::string(name(isa)) + " is not available");
    }
#if defined(BEREZIN_HAVE_AVX2)
    if (isa == Isa::avx2) return detail::avx2_table();
#endif
    return detail::scalar_table();
}

namespace {

const KernelTable* initial_selection() noexcept {
    const char* forced = std::getenv("BEREZIN_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &detail::scalar_table();
#if defined(BEREZIN_HAVE_AVX2)
    if (supported(Isa::avx2)) return &detail::avx2_table();
#endif
    return &detail::scalar_table();
}

std::atomic<const KernelTable*>& selection() noexcept {
    static std::atomic<const KernelTable*> current{initial_selection()};
    return current;
}

}  // namespace

const KernelTable& active() noexcept { return *selection().load(std::memory_order_acquire); }

void select(Isa isa) { selection().store(&table(isa), std::memory_order_release); }

}  // namespace berezin::simd
