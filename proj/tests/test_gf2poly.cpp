#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "eqlc/errors.hpp"
#include "eqlc/gf2poly.hpp"
#include "eqlc/numtheory.hpp"
#include "eqlc/seqgen.hpp"

using namespace eqlc;

namespace {

// Reference arithmetic on polynomials of degree < 64 packed into one word.
using Small = std::uint64_t;

int small_deg(Small a) { return a ? 63 - __builtin_clzll(a) : -1; }

Small small_mul(Small a, Small b) {
    Small out = 0;
    for (int i = 0; i < 64; ++i)
        if ((a >> i) & 1u) out ^= b << i;
    return out;
}

Small small_rem(Small a, Small m) {
    const int dm = small_deg(m);
    for (int d = small_deg(a); d >= dm; d = small_deg(a)) a ^= m << (d - dm);
    return a;
}

Gf2Poly to_poly(Small a) { return Gf2Poly::from_words({a}); }

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_deg) {
    std::vector<std::uint8_t> bits(max_deg + 1);
    for (auto& b : bits) b = rng() & 1u;
    return Gf2Poly::from_bits(bits);
}

}  // namespace

TEST_CASE("degree sentinel") {
    CHECK_FALSE(Gf2Poly{}.degree().is_finite());
    CHECK(Gf2Poly{}.degree() < Degree(0));
    CHECK(Gf2Poly::one().degree() == Degree(0));
    CHECK_FALSE((Degree::minus_infinity() + Degree(7)).is_finite());
    CHECK_THROWS(Gf2Poly{}.degree().value());
    std::ostringstream os;
    os << Degree::minus_infinity() << ' ' << Degree(3);
    CHECK(os.str() == "-inf 3");
}

TEST_CASE("construction and normal form") {
    const auto f = Gf2Poly::from_exponents({0, 5, 70, 5});
    CHECK(f.exponents() == std::vector<std::size_t>{0, 70});
    CHECK(f.weight() == 2);
    CHECK(f.degree() == Degree(70));
    CHECK(f.words().size() == 2);
    CHECK(Gf2Poly::from_words({0, 0, 0}).is_zero());
    CHECK(Gf2Poly::from_words({1, 0, 0}) == Gf2Poly::one());

    const std::vector<std::uint8_t> zero9(9, 0);
    CHECK(Gf2Poly::from_bits(zero9).is_zero());
    const std::vector<std::uint8_t> unit{1, 0, 0};
    CHECK(Gf2Poly::from_bits(unit) == Gf2Poly::one());

    const auto seq = gen_euler_threshold(3, 3);
    const auto s = Gf2Poly::from_bits(seq.bits());
    CHECK(s.exponents() == std::vector<std::size_t>{2, 4, 5, 10, 17, 22, 23, 25});
    CHECK(s.to_bits(27) == std::vector<std::uint8_t>(seq.bits().begin(), seq.bits().end()));

    auto g = f;
    g.flip(70);
    g.flip(0);
    CHECK(g.is_zero());
    CHECK(f.shifted(3) == Gf2Poly::from_exponents({3, 73}));
}

TEST_CASE("small-degree arithmetic against word oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const Small a = rng() >> (32 + rng() % 32), b = rng() >> (32 + rng() % 32);  // both < 2^32
        CHECK(to_poly(a) + to_poly(b) == to_poly(a ^ b));
        CHECK(to_poly(a) * to_poly(b) == to_poly(small_mul(a, b)));
        if (b) CHECK(rem(to_poly(a), to_poly(b)) == to_poly(small_rem(a, b)));
    }
}

TEST_CASE("worked examples") {
    const auto x3_1 = Gf2Poly::from_exponents({0, 3});
    const auto x2_x_1 = Gf2Poly::from_exponents({0, 1, 2});
    CHECK(gcd(x3_1, x2_x_1) == x2_x_1);
    CHECK(rem(Gf2Poly::x_pow_minus_one(9), Gf2Poly::x_pow_minus_one(3)).is_zero());
    CHECK(gcd(Gf2Poly{}, Gf2Poly{}).is_zero());
    CHECK(gcd(Gf2Poly{}, x3_1) == x3_1);
    CHECK_THROWS_AS(rem(x3_1, Gf2Poly{}), InvalidArgument);
    CHECK_THROWS_AS(divides(Gf2Poly{}, x3_1), InvalidArgument);
    CHECK(divides(Gf2Poly::one(), x3_1));
}

TEST_CASE("ring axioms at degree <= 512") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const auto f = random_poly(rng, 512), g = random_poly(rng, 512), h = random_poly(rng, 512);
        CHECK((f + f).is_zero());
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
        CHECK(mul(f, g) == f * g);
        CHECK(add(f, g) == f + g);
    }
}

TEST_CASE("euclidean division reconstructs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_poly(rng, 700);
        auto m = random_poly(rng, rng() % 300);
        if (m.is_zero()) m = Gf2Poly::one();
        const auto [q, r] = divmod(f, m);
        CHECK(q * m + r == f);
        CHECK(r.degree() < m.degree());
        CHECK(rem(f, m) == r);
        CHECK(f % m == r);
    }
}

TEST_CASE("gcd against a divisor scan up to degree 12") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        // a shared factor makes nontrivial gcds common
        const Small c = (rng() & 0x3fu) | 1u;
        const Small a = small_mul(c, (rng() & 0x7fu) | 1u), b = small_mul(c, (rng() & 0x3fu) | 1u);
        const auto g = gcd(to_poly(a), to_poly(b));
        REQUIRE(divides(g, to_poly(a)));
        REQUIRE(divides(g, to_poly(b)));
        for (Small d = 1; d < (1u << 13); ++d)
            if (small_rem(a, d) == 0 && small_rem(b, d) == 0) REQUIRE(divides(to_poly(d), g));
    }
}

TEST_CASE("cyclotomic factors") {
    CHECK(cyclotomic_factor(3, 1) == Gf2Poly::from_exponents({0, 1, 2}));
    CHECK(cyclotomic_factor(3, 2) == Gf2Poly::from_exponents({0, 3, 6}));
    CHECK(cyclotomic_factor(5, 3).degree() == Degree(100));
    for (std::uint64_t p : {3u, 5u, 7u})
        for (unsigned r = 1; r <= 3; ++r) {
            Gf2Poly prod = Gf2Poly::one();
            for (const auto& f : period_factors(p, r)) prod = prod * f;
            CHECK(prod == Gf2Poly::x_pow_minus_one(checked_pow(p, r)));
        }
    CHECK(is_irreducible_context(3));
    CHECK(is_irreducible_context(5));
    CHECK_FALSE(is_irreducible_context(7));
}

TEST_CASE("irreducibility of the factors when 2 is primitive mod p^2") {
    // no divisor of degree <= deg/2 among all polynomials up to degree 12
    for (std::uint64_t p : {3u, 5u})
        for (unsigned j : {1u, 2u}) {
            const auto phi = cyclotomic_factor(p, j);
            const std::size_t half = phi.degree().value() / 2;
            for (Small d = 2; d < (Small(1) << (half + 1)); ++d) CHECK_FALSE(divides(to_poly(d), phi));
        }
    // 7 is a non-example: 1+X+...+X^6 splits over the base field
    CHECK(divides(Gf2Poly::from_exponents({0, 1, 3}), cyclotomic_factor(7, 1)));
}

TEST_CASE("hex and text forms") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_poly(rng, rng() % 200);
        CHECK(from_hex(to_hex(f)) == f);
    }
    CHECK(to_hex(Gf2Poly::from_exponents({0, 9})) == "0102");
    CHECK(to_string(Gf2Poly::from_exponents({0, 2, 3})) == "1+X^2+X^3");
    CHECK(to_string(Gf2Poly::from_exponents({1})) == "X");
    CHECK(to_string(Gf2Poly{}) == "0");
    CHECK_THROWS(from_hex("0g"));
}

TEST_CASE("structure of the sequence polynomials") {
    // S(1) = 0; residue mod Phi(p) is the constant ((p^{r-1} -+ 1)/2) mod 2;
    // none of the higher factors divide.
    for (std::uint64_t p : {3u, 5u})
        for (unsigned r : {2u, 3u}) {
            const std::uint64_t q = checked_pow(p, r - 1);
            const auto S = Gf2Poly::from_bits(gen_euler_threshold(p, r).bits());
            const auto Sbar = Gf2Poly::from_bits(gen_complement(p, r).bits());
            CAPTURE(p);
            CAPTURE(r);
            CHECK(divides(Gf2Poly::from_exponents({0, 1}), S));
            const Gf2Poly c = ((q - 1) / 2) % 2 ? Gf2Poly::one() : Gf2Poly{};
            const Gf2Poly cbar = ((q + 1) / 2) % 2 ? Gf2Poly::one() : Gf2Poly{};
            CHECK(rem(S, cyclotomic_factor(p, 1)) == c);
            CHECK(rem(Sbar, cyclotomic_factor(p, 1)) == cbar);
            for (unsigned j = 2; j <= r; ++j) {
                CHECK_FALSE(divides(cyclotomic_factor(p, j), S));
                CHECK_FALSE(divides(cyclotomic_factor(p, j), Sbar));
            }
        }
    CHECK_FALSE(divides(cyclotomic_factor(3, 2), Gf2Poly::from_bits(gen_euler_threshold(3, 3).bits())));
}
