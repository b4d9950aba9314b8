#pragma once

// Word-parallel bitset kernels used by predicates and relation rows.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled in as well and selected at runtime when the CPU
// supports it. Both must produce bit-identical results; tests/test_bitops.cpp
// checks this on randomized inputs of every tail length.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace exegete::simd {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

struct Kernels {
    std::string_view name;

    // dst |= src
    void (*or_into)(Word* dst, const Word* src, std::size_t n);
    // dst &= src
    void (*and_into)(Word* dst, const Word* src, std::size_t n);
    // dst &= ~src
    void (*andnot_into)(Word* dst, const Word* src, std::size_t n);
    // (a & b) != 0
    bool (*intersects)(const Word* a, const Word* b, std::size_t n);
    // (a & ~b) == 0
    bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
    bool (*equal)(const Word* a, const Word* b, std::size_t n);
    bool (*is_zero)(const Word* a, std::size_t n);
    // For every set bit i of select (i < rows), dst |= matrix[i * stride .. i * stride + stride).
    void (*or_selected_rows)(Word* dst, const Word* matrix, std::size_t stride, const Word* select,
                             std::size_t rows);
};

const Kernels& scalar_kernels();

// nullptr when the variant is not compiled in or the running CPU lacks it.
const Kernels* avx2_kernels();

// Chosen once per process. EXEGETE_SIMD=scalar forces the reference kernels.
const Kernels& active_kernels();

namespace detail {
#if defined(__x86_64__) || defined(_M_X64)
const Kernels* avx2_table();
#endif
}  // namespace detail

inline void or_into(std::span<Word> dst, std::span<const Word> src) {
    active_kernels().or_into(dst.data(), src.data(), dst.size());
}
inline void and_into(std::span<Word> dst, std::span<const Word> src) {
    active_kernels().and_into(dst.data(), src.data(), dst.size());
}
inline void andnot_into(std::span<Word> dst, std::span<const Word> src) {
    active_kernels().andnot_into(dst.data(), src.data(), dst.size());
}
inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
    return active_kernels().intersects(a.data(), b.data(), a.size());
}
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    return active_kernels().is_subset(a.data(), b.data(), a.size());
}
inline bool equal(std::span<const Word> a, std::span<const Word> b) {
    return active_kernels().equal(a.data(), b.data(), a.size());
}
inline bool is_zero(std::span<const Word> a) { return active_kernels().is_zero(a.data(), a.size()); }

inline bool test_bit(std::span<const Word> w, std::size_t i) {
    return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set_bit(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }

}  // namespace exegete::simd
