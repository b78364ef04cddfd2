#pragma once

/**
 * @file numtheory.hpp
 * @brief Modular arithmetic on prime powers and Euler quotients.
 *
 * For an odd prime p and r >= 1 the Euler quotient of a unit u is
 *
 *     Q_r(u) = ((u^phi(p^r) - 1) / p^r) mod p^r,   Q_r(u) = 0 when p | u.
 *
 * It is evaluated by one exponentiation modulo p^(2r) followed by an exact
 * division, so no arbitrary-precision integers are needed. All moduli must
 * fit below 2^128; anything larger is rejected with RangeError.
 *
 * Primality and factorisation use trial division. Primes are accepted up to
 * kMaxPrime, which is far beyond the sizes where the sequence analyses are
 * tractable anyway.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace eqlc {

__extension__ using u128 = unsigned __int128;

inline constexpr std::uint64_t kMaxPrime = 1u << 20;

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

/// Throws InvalidArgument unless p is an odd prime <= kMaxPrime.
void require_odd_prime(std::uint64_t p);

/// base^exp, throwing RangeError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// An odd prime p together with an exponent r and the properties of p that
/// decide which closed forms apply.
struct PrimePowerParams {
    std::uint64_t p = 3;
    unsigned r = 1;
    bool two_primitive_mod_p2 = false;
    unsigned p_mod4 = 3;

    /// Validates p and r (r >= 1, p^(2r) < 2^128) and fills in the flags.
    PrimePowerParams(std::uint64_t p, unsigned r);

    std::uint64_t modulus() const { return checked_pow(p, r); }
};

/// phi(p^r) = p^(r-1) (p - 1).
std::uint64_t phi_prime_power(std::uint64_t p, unsigned r);

/// base^exp mod modulus by square-and-multiply. modulus >= 2.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);
u128 mod_pow(u128 base, u128 exp, u128 modulus);

/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Q_r(u) in [0, p^r).
std::uint64_t euler_quotient(std::uint64_t p, unsigned r, std::uint64_t u);

/// Least n >= 1 with a^n = 1 (mod m). Requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// True iff the order of 2 modulo p^2 is p(p-1).
bool is_two_primitive_mod_p2(std::uint64_t p);

/// True iff 2^(p-1) = 1 (mod p^2).
bool is_wieferich_base2(std::uint64_t p);

/// True iff g is a primitive root modulo m.
bool is_primitive_root(std::uint64_t g, std::uint64_t m);

/// Smallest g >= 2 that is a primitive root mod p^r with Q_{r-1}(g) = 1.
/// Requires r >= 2.
std::uint64_t find_generator(std::uint64_t p, unsigned r);

}  // namespace eqlc
