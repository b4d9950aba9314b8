#include "exegete/bitops.hpp"

#include <bit>

namespace exegete::simd {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_into_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool is_zero_scalar(const Word* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}

void or_selected_rows_scalar(Word* dst, const Word* matrix, std::size_t stride, const Word* select,
                             std::size_t rows) {
    const std::size_t nsel = words_for(rows);
    for (std::size_t w = 0; w < nsel; ++w) {
        Word bits = select[w];
        while (bits) {
            const std::size_t row = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            if (row >= rows) return;
            or_into_scalar(dst, matrix + row * stride, stride);
        }
    }
}

constexpr Kernels kScalar{
    "scalar",         or_into_scalar, and_into_scalar, andnot_into_scalar,     intersects_scalar,
    is_subset_scalar, equal_scalar,   is_zero_scalar,  or_selected_rows_scalar,
};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace exegete::simd
