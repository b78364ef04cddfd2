#pragma once

/**
 * @file gf2poly.hpp
 * @brief Dense polynomials over the two-element field.
 *
 * Coefficients are packed 64 per word, lowest exponent in bit 0 of word 0.
 * Values are always normalised (no zero words above the leading term), so
 * the zero polynomial is the empty word vector and equality is word
 * equality.
 *
 * Multiplication is schoolbook over words. The periods handled here stay
 * below ~10^4 terms, well under the point where Karatsuba-style splitting
 * would pay off.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace eqlc {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// Minus infinity compares below every finite degree and absorbs addition.
class Degree {
   public:
    constexpr explicit Degree(std::size_t d) : value_(d), finite_(true) {}

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }

    /// The finite value; throws std::logic_error for minus infinity.
    std::size_t value() const;

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

   private:
    constexpr Degree() = default;
    std::size_t value_ = 0;
    bool finite_ = false;
};

std::ostream& operator<<(std::ostream& os, Degree d);

class Gf2Poly {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Gf2Poly() = default;

    /// Sum of X^e over the listed exponents (repeats cancel).
    static Gf2Poly from_exponents(std::initializer_list<std::size_t> exps);
    static Gf2Poly from_exponents(std::span<const std::size_t> exps);
    static Gf2Poly monomial(std::size_t e);
    static Gf2Poly one() { return monomial(0); }
    /// Coefficient i = bits[i] & 1.
    static Gf2Poly from_bits(std::span<const std::uint8_t> bits);
    static Gf2Poly from_words(std::vector<Word> words);
    /// X^n + 1 (equal to X^n - 1 over this field).
    static Gf2Poly x_pow_minus_one(std::size_t n);

    bool is_zero() const { return words_.empty(); }
    Degree degree() const;
    bool coeff(std::size_t i) const {
        return i / kWordBits < words_.size() && ((words_[i / kWordBits] >> (i % kWordBits)) & 1u);
    }
    void flip(std::size_t i);
    std::size_t weight() const;
    std::vector<std::size_t> exponents() const;
    const std::vector<Word>& words() const { return words_; }

    /// Coefficients 0..length-1 as a 0/1 byte vector.
    std::vector<std::uint8_t> to_bits(std::size_t length) const;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    Gf2Poly& operator*=(const Gf2Poly& rhs);
    Gf2Poly& operator%=(const Gf2Poly& rhs);
    /// Multiply by X^n.
    Gf2Poly shifted(std::size_t n) const;

    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator%(Gf2Poly a, const Gf2Poly& b) { return a %= b; }
    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

   private:
    explicit Gf2Poly(std::vector<Word> w) : words_(std::move(w)) { normalize(); }
    void normalize();

    std::vector<Word> words_;
};

Gf2Poly add(const Gf2Poly& f, const Gf2Poly& g);
Gf2Poly mul(const Gf2Poly& f, const Gf2Poly& g);

/// Remainder of f by a nonzero m; throws InvalidArgument for m = 0.
Gf2Poly rem(const Gf2Poly& f, const Gf2Poly& m);

struct DivMod {
    Gf2Poly quotient;
    Gf2Poly remainder;
};
DivMod divmod(const Gf2Poly& f, const Gf2Poly& m);

/// gcd(0, 0) = 0; otherwise the unique (monic) greatest common divisor.
Gf2Poly gcd(const Gf2Poly& f, const Gf2Poly& g);

/// d | f for nonzero d.
bool divides(const Gf2Poly& d, const Gf2Poly& f);

/// 1 + X^(p^(j-1)) + X^(2 p^(j-1)) + ... + X^((p-1) p^(j-1)).
Gf2Poly cyclotomic_factor(std::uint64_t p, unsigned j);

/// The factors X+1, Phi(p), ..., Phi(p^r) of X^(p^r) + 1 in that order.
std::vector<Gf2Poly> period_factors(std::uint64_t p, unsigned r);

/// True when every cyclotomic_factor(p, j) is irreducible, i.e. 2 is a
/// primitive root modulo p^2.
bool is_irreducible_context(std::uint64_t p);

/// Hex of the coefficient bitstring, byte-wise, lowest exponent in the least
/// significant bit of the first byte. Debugging aid only.
std::string to_hex(const Gf2Poly& f);
Gf2Poly from_hex(std::string_view hex);

/// Human-readable form such as "1+X^2+X^3"; "0" for the zero polynomial.
std::string to_string(const Gf2Poly& f);
std::ostream& operator<<(std::ostream& os, const Gf2Poly& f);

}  // namespace eqlc
