// AVX2 variants. Compiled with per-function target attributes so the rest of
// the library stays baseline x86-64; only reached after a CPUID check.

#include "exegete/bitops.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#define EXEGETE_AVX2 __attribute__((target("avx2")))

namespace exegete::simd {
namespace {

EXEGETE_AVX2 inline __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
EXEGETE_AVX2 inline void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

EXEGETE_AVX2 void or_into_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

EXEGETE_AVX2 void and_into_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

EXEGETE_AVX2 void andnot_into_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b.
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

EXEGETE_AVX2 bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

EXEGETE_AVX2 bool is_subset_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // testc(b, a) is 1 iff (~b & a) == 0.
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

EXEGETE_AVX2 bool equal_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

EXEGETE_AVX2 bool is_zero_avx2(const Word* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = load(a + i);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

EXEGETE_AVX2 void or_selected_rows_avx2(Word* dst, const Word* matrix, std::size_t stride,
                                        const Word* select, std::size_t rows) {
    const std::size_t nsel = words_for(rows);
    // Single-vector rows (<= 256 states) keep the accumulator in a register.
    if (stride == 4) {
        __m256i acc = load(dst);
        for (std::size_t w = 0; w < nsel; ++w) {
            Word bits = select[w];
            while (bits) {
                const std::size_t row = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (row >= rows) break;
                acc = _mm256_or_si256(acc, load(matrix + row * 4));
            }
        }
        store(dst, acc);
        return;
    }
    for (std::size_t w = 0; w < nsel; ++w) {
        Word bits = select[w];
        while (bits) {
            const std::size_t row = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            if (row >= rows) return;
            or_into_avx2(dst, matrix + row * stride, stride);
        }
    }
}

constexpr Kernels kAvx2{
    "avx2",         or_into_avx2, and_into_avx2, andnot_into_avx2,      intersects_avx2,
    is_subset_avx2, equal_avx2,   is_zero_avx2,  or_selected_rows_avx2,
};

}  // namespace

namespace detail {
const Kernels* avx2_table() { return &kAvx2; }
}  // namespace detail

}  // namespace exegete::simd

#endif
