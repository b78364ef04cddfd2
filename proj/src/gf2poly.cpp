#include "eqlc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "eqlc/errors.hpp"
#include "eqlc/numtheory.hpp"

namespace eqlc {

namespace {

constexpr std::size_t kBits = Gf2Poly::kWordBits;

// dst ^= src << shift, dst sized to hold the result.
void xor_shifted(std::vector<Gf2Poly::Word>& dst, const std::vector<Gf2Poly::Word>& src, std::size_t shift) {
    const std::size_t ws = shift / kBits, bs = shift % kBits;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (bs != 0 && i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (kBits - bs);
    }
}

std::size_t top_bit(const std::vector<Gf2Poly::Word>& w) {
    return (w.size() - 1) * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(w.back())));
}

}  // namespace

std::size_t Degree::value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
    return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_finite()) return os << d.value();
    return os << "-inf";
}

void Gf2Poly::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exps) {
    return from_exponents(std::span<const std::size_t>(exps.begin(), exps.size()));
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exps) {
    Gf2Poly f;
    for (std::size_t e : exps) f.flip(e);
    return f;
}

Gf2Poly Gf2Poly::monomial(std::size_t e) {
    Gf2Poly f;
    f.flip(e);
    return f;
}

Gf2Poly Gf2Poly::from_bits(std::span<const std::uint8_t> bits) {
    std::vector<Word> w((bits.size() + kBits - 1) / kBits, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1u) w[i / kBits] |= Word{1} << (i % kBits);
    return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_words(std::vector<Word> words) { return Gf2Poly(std::move(words)); }

Gf2Poly Gf2Poly::x_pow_minus_one(std::size_t n) {
    Gf2Poly f = monomial(n);
    f.flip(0);
    return f;
}

Degree Gf2Poly::degree() const {
    if (words_.empty()) return Degree::minus_infinity();
    return Degree(top_bit(words_));
}

void Gf2Poly::flip(std::size_t i) {
    if (i / kBits >= words_.size()) words_.resize(i / kBits + 1, 0);
    words_[i / kBits] ^= Word{1} << (i % kBits);
    normalize();
}

std::size_t Gf2Poly::weight() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> Gf2Poly::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (Word w = words_[i]; w != 0; w &= w - 1) out.push_back(i * kBits + static_cast<std::size_t>(std::countr_zero(w)));
    return out;
}

std::vector<std::uint8_t> Gf2Poly::to_bits(std::size_t length) const {
    std::vector<std::uint8_t> bits(length, 0);
    for (std::size_t i = 0; i < length; ++i) bits[i] = coeff(i) ? 1 : 0;
    return bits;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Gf2Poly::Word> out(a.words_.size() + b.words_.size(), 0);
    const auto& small = a.weight() <= b.weight() ? a : b;
    const auto& big = &small == &a ? b : a;
    for (std::size_t e : small.exponents()) xor_shifted(out, big.words_, e);
    return Gf2Poly(std::move(out));
}

Gf2Poly& Gf2Poly::operator*=(const Gf2Poly& rhs) { return *this = *this * rhs; }

Gf2Poly Gf2Poly::shifted(std::size_t n) const {
    if (is_zero()) return {};
    std::vector<Word> out(words_.size() + n / kBits + 1, 0);
    xor_shifted(out, words_, n);
    return Gf2Poly(std::move(out));
}

Gf2Poly& Gf2Poly::operator%=(const Gf2Poly& rhs) {
    *this = divmod(*this, rhs).remainder;
    return *this;
}

Gf2Poly add(const Gf2Poly& f, const Gf2Poly& g) { return f + g; }
Gf2Poly mul(const Gf2Poly& f, const Gf2Poly& g) { return f * g; }

DivMod divmod(const Gf2Poly& f, const Gf2Poly& m) {
    if (m.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const std::size_t dm = m.degree().value();
    std::vector<Gf2Poly::Word> r = f.words();
    if (r.empty() || top_bit(r) < dm) return {Gf2Poly{}, f};
    const std::size_t df = top_bit(r);
    std::vector<Gf2Poly::Word> q((df - dm) / kBits + 1, 0);
    std::vector<Gf2Poly::Word> shifted(r.size(), 0);
    // Reduce from the top one leading term at a time.
    for (std::size_t i = df + 1; i-- > dm;) {
        if (!((r[i / kBits] >> (i % kBits)) & 1u)) continue;
        const std::size_t s = i - dm;
        q[s / kBits] |= Gf2Poly::Word{1} << (s % kBits);
        xor_shifted(r, m.words(), s);
    }
    return {Gf2Poly::from_words(std::move(q)), Gf2Poly::from_words(std::move(r))};
}

Gf2Poly rem(const Gf2Poly& f, const Gf2Poly& m) { return divmod(f, m).remainder; }

Gf2Poly gcd(const Gf2Poly& f, const Gf2Poly& g) {
    Gf2Poly a = f, b = g;
    while (!b.is_zero()) {
        Gf2Poly t = rem(a, b);
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

bool divides(const Gf2Poly& d, const Gf2Poly& f) {
    if (d.is_zero()) throw InvalidArgument("divisibility by the zero polynomial");
    return rem(f, d).is_zero();
}

Gf2Poly cyclotomic_factor(std::uint64_t p, unsigned j) {
    require_odd_prime(p);
    if (j < 1) throw InvalidArgument("cyclotomic_factor needs j >= 1");
    const std::uint64_t step = checked_pow(p, j - 1);
    Gf2Poly f;
    for (std::uint64_t i = 0; i < p; ++i) f.flip(static_cast<std::size_t>(i * step));
    return f;
}

std::vector<Gf2Poly> period_factors(std::uint64_t p, unsigned r) {
    std::vector<Gf2Poly> out{Gf2Poly::from_exponents({0, 1})};
    for (unsigned j = 1; j <= r; ++j) out.push_back(cyclotomic_factor(p, j));
    return out;
}

bool is_irreducible_context(std::uint64_t p) { return is_two_primitive_mod_p2(p); }

std::string to_hex(const Gf2Poly& f) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    const auto& w = f.words();
    const std::size_t nbytes = f.is_zero() ? 0 : f.degree().value() / 8 + 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const auto byte = static_cast<unsigned>((w[b / 8] >> (8 * (b % 8))) & 0xffu);
        out += kDigits[byte >> 4];
        out += kDigits[byte & 0xfu];
    }
    return out;
}

Gf2Poly from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw InvalidArgument("hex string must have an even number of digits");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw InvalidArgument(std::string("invalid hex digit '") + c + "'");
    };
    std::vector<Gf2Poly::Word> w((hex.size() / 2 + 7) / 8, 0);
    for (std::size_t b = 0; b < hex.size() / 2; ++b) {
        const Gf2Poly::Word byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
        w[b / 8] |= byte << (8 * (b % 8));
    }
    return Gf2Poly::from_words(std::move(w));
}

std::string to_string(const Gf2Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e : f.exponents()) {
        if (!first) os << '+';
        first = false;
        if (e == 0)
            os << '1';
        else if (e == 1)
            os << 'X';
        else
            os << "X^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& f) { return os << to_string(f); }

}  // namespace eqlc
