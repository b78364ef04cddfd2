#include <algorithm>

#include "eqlc/errors.hpp"
#include "eqlc/lcanalysis.hpp"

namespace eqlc {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::brute:
            return "brute";
        case Method::coset:
            return "coset";
        case Method::formula:
            return "formula";
        case Method::bound:
            return "bound";
    }
    return "bound";
}

std::size_t linear_complexity(const Gf2Poly& generating, std::size_t period) {
    if (period == 0) throw InvalidArgument("period must be >= 1");
    if (generating.is_zero()) return 0;
    if (generating.degree().value() >= period) throw InvalidArgument("generating polynomial degree must be below the period");
    return period - gcd(Gf2Poly::x_pow_minus_one(period), generating).degree().value();
}

std::size_t lc_gcd(const BinarySequence& seq) { return linear_complexity(Gf2Poly::from_bits(seq.bits()), seq.period()); }

BmResult berlekamp_massey(std::span<const std::uint8_t> s) {
    const std::size_t n = s.size();
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    std::size_t L = 0, m = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = s[i] & 1u;
        for (std::size_t j = 1; j <= L; ++j) d ^= c[j] & s[i - j];
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * L <= i) {
            t = c;
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            L = i + 1 - L;
            b = std::move(t);
            m = 1;
        } else {
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            ++m;
        }
    }
    Gf2Poly minimal;
    for (std::size_t j = 0; j <= L; ++j)
        if (c[j]) minimal.flip(L - j);
    return {L, std::move(minimal)};
}

BmResult berlekamp_massey(const BinarySequence& seq) {
    std::vector<std::uint8_t> doubled(seq.bits().begin(), seq.bits().end());
    doubled.insert(doubled.end(), seq.bits().begin(), seq.bits().end());
    return berlekamp_massey(std::span<const std::uint8_t>(doubled));
}

}  // namespace eqlc
