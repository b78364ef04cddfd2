#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqlc/gf2poly.hpp"

namespace eqlc::detail {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void xor_into(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

inline std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

inline bool all_zero_masked(const Word* a, const Word* mask, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & mask[i]) return false;
    return true;
}

// Coefficient-string order: a < b iff at the lowest differing exponent a has
// a 0 and b has a 1.
inline bool coeff_string_less(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const Word diff = a[i] ^ b[i];
        if (diff != 0) return (b[i] >> std::countr_zero(diff)) & 1u;
    }
    return false;
}

inline std::vector<Word> to_words(const Gf2Poly& f, std::size_t n) {
    std::vector<Word> w(n, 0);
    const auto& src = f.words();
    for (std::size_t i = 0; i < src.size() && i < n; ++i) w[i] = src[i];
    return w;
}

inline void set_bit(Word* a, std::size_t i) { a[i / 64] |= Word{1} << (i % 64); }

}  // namespace eqlc::detail
