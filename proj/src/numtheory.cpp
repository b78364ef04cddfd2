#include "eqlc/numtheory.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "eqlc/errors.hpp"

namespace eqlc {

namespace {

constexpr u128 kU64Limit = static_cast<u128>(1) << 64;

u128 add_mod(u128 a, u128 b, u128 m) {
    // a, b < m; avoid wrapping when m is close to 2^128
    return a >= m - b ? a - (m - b) : a + b;
}

u128 mul_mod(u128 a, u128 b, u128 m) {
    if (m <= kU64Limit) return (a * b) % m;
    u128 result = 0;
    while (b != 0) {
        if (b & 1) result = add_mod(result, a, m);
        a = add_mod(a, a, m);
        b >>= 1;
    }
    return result;
}

// p^e as a 128-bit value; throws once the product would reach 2^128.
u128 wide_pow(std::uint64_t p, unsigned e) {
    u128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (v > std::numeric_limits<u128>::max() / p)
            throw RangeError("p^" + std::to_string(e) + " exceeds 128 bits for p=" + std::to_string(p));
        v *= p;
    }
    return v;
}

void require_quotient_range(std::uint64_t p, unsigned r) {
    require_odd_prime(p);
    if (r < 1) throw InvalidArgument("exponent r must be >= 1");
    wide_pow(p, 2 * r);
    checked_pow(p, r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(std::uint64_t p) {
    if (p > kMaxPrime)
        throw RangeError("prime " + std::to_string(p) + " exceeds trial-division limit " + std::to_string(kMaxPrime));
    if (p == 2 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && v > std::numeric_limits<std::uint64_t>::max() / base)
            throw RangeError(std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
        v *= base;
    }
    return v;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

PrimePowerParams::PrimePowerParams(std::uint64_t p_, unsigned r_) : p(p_), r(r_) {
    require_quotient_range(p, r);
    p_mod4 = static_cast<unsigned>(p % 4);
    two_primitive_mod_p2 = is_two_primitive_mod_p2(p);
}

std::uint64_t phi_prime_power(std::uint64_t p, unsigned r) {
    require_odd_prime(p);
    if (r < 1) throw InvalidArgument("exponent r must be >= 1");
    return checked_pow(p, r - 1) * (p - 1);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    return static_cast<std::uint64_t>(mod_pow(static_cast<u128>(base), static_cast<u128>(exp), static_cast<u128>(modulus)));
}

u128 mod_pow(u128 base, u128 exp, u128 modulus) {
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
    u128 result = 1;
    base %= modulus;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidArgument("modulus must be >= 2");
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw InvalidArgument(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    const auto sm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % sm) + sm) % sm);
}

std::uint64_t euler_quotient(std::uint64_t p, unsigned r, std::uint64_t u) {
    require_quotient_range(p, r);
    if (u % p == 0) return 0;
    const u128 pr = wide_pow(p, r);
    const u128 p2r = wide_pow(p, 2 * r);
    const u128 phi = static_cast<u128>(phi_prime_power(p, r));
    const u128 t = mod_pow(static_cast<u128>(u) % p2r, phi, p2r);
    // t = 1 (mod p^r) by Euler's theorem, so t >= 1 and the division is exact
    const u128 q = (t - 1) / pr;
    return static_cast<std::uint64_t>(q % pr);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidArgument("modulus must be >= 2");
    if (std::gcd(a % m, m) != 1)
        throw InvalidArgument("order undefined: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
    std::uint64_t phi = m;
    for (const auto& [q, e] : factorize(m)) phi = phi / q * (q - 1);
    std::uint64_t n = phi;
    for (const auto& [q, e] : factorize(phi)) {
        for (unsigned i = 0; i < e && n % q == 0; ++i) {
            if (mod_pow(a, n / q, m) != 1) break;
            n /= q;
        }
    }
    return n;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t m) {
    if (std::gcd(g % m, m) != 1) return false;
    std::uint64_t phi = m;
    for (const auto& [q, e] : factorize(m)) phi = phi / q * (q - 1);
    return multiplicative_order(g, m) == phi;
}

bool is_two_primitive_mod_p2(std::uint64_t p) {
    require_odd_prime(p);
    return multiplicative_order(2, checked_pow(p, 2)) == p * (p - 1);
}

bool is_wieferich_base2(std::uint64_t p) {
    require_odd_prime(p);
    return mod_pow(2, p - 1, checked_pow(p, 2)) == 1;
}

std::uint64_t find_generator(std::uint64_t p, unsigned r) {
    require_quotient_range(p, r);
    if (r < 2) throw InvalidArgument("find_generator needs r >= 2");
    const std::uint64_t pr = checked_pow(p, r);
    for (std::uint64_t g = 2; g < pr; ++g) {
        if (g % p == 0) continue;
        if (euler_quotient(p, r - 1, g) != 1) continue;
        if (is_primitive_root(g, pr)) return g;
    }
    throw ConstructionError("no primitive root g with Q_" + std::to_string(r - 1) + "(g)=1 below " + std::to_string(pr));
}

}  // namespace eqlc
