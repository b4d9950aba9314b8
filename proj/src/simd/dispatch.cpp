#include <cstdlib>
#include <string_view>

#include "exegete/bitops.hpp"

namespace exegete::simd {

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const Kernels& active_kernels() {
    static const Kernels& chosen = [] () -> const Kernels& {
        const char* forced = std::getenv("EXEGETE_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
        if (const Kernels* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace exegete::simd
