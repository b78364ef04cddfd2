#pragma once

/**
 * @file lcanalysis.hpp
 * @brief Linear complexity and k-error linear complexity.
 *
 * Routes:
 *   - lc_gcd:            T - deg gcd(X^T - 1, H(X)).
 *   - berlekamp_massey:  shortest LFSR over two periods of the sequence.
 *   - klc_brute:         every error pattern of weight <= k_max.
 *   - min_weight_coset / klc_structured:
 *                        for a divisor d of X^T - 1, the cheapest error e
 *                        with d | S + e is found by enumerating the
 *                        quotient pi in S + e = d * pi; combining all
 *                        divisors built from the irreducible factors of
 *                        X^(p^r) - 1 gives the profile.
 *   - lc_formula / klc_formula:
 *                        closed forms for the Euler-quotient families.
 *
 * Profiles never claim an exact value the route cannot justify. Entries
 * outside what a route can decide are reported as intervals.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eqlc/gf2poly.hpp"
#include "eqlc/seqgen.hpp"

namespace eqlc {

struct SearchConfig {
    unsigned workers = 1;
    std::uint64_t pattern_budget = 100'000'000;
    unsigned coset_dim_limit = 26;
};

struct ErrorWitness {
    Gf2Poly error_poly;
    std::size_t weight = 0;
    std::size_t achieved_lc = 0;
};

struct Exact {
    std::uint64_t value = 0;
    friend bool operator==(const Exact&, const Exact&) = default;
};

struct Interval {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

using KlcValue = std::variant<Exact, Interval>;

inline std::uint64_t lower(const KlcValue& v) {
    return std::holds_alternative<Exact>(v) ? std::get<Exact>(v).value : std::get<Interval>(v).lo;
}
inline std::uint64_t upper(const KlcValue& v) {
    return std::holds_alternative<Exact>(v) ? std::get<Exact>(v).value : std::get<Interval>(v).hi;
}
inline bool is_exact(const KlcValue& v) { return std::holds_alternative<Exact>(v); }

enum class Method { brute, coset, formula, bound };
std::string_view to_string(Method m);

struct KlcEntry {
    std::size_t k = 0;
    KlcValue value;
    Method method = Method::brute;
    std::optional<ErrorWitness> witness;
};

struct KlcProfile {
    std::uint64_t p = 0;
    unsigned r = 0;
    Family family = Family::custom;
    std::size_t period = 0;
    /// Ascending in k, contiguous from k = 0.
    std::vector<KlcEntry> entries;

    std::size_t max_k() const { return entries.empty() ? 0 : entries.back().k; }
    const KlcEntry* find(std::size_t k) const { return k < entries.size() ? &entries[k] : nullptr; }
};

/// T - deg gcd(X^T - 1, H) for a generating polynomial H of degree < T.
std::size_t linear_complexity(const Gf2Poly& generating, std::size_t period);

std::size_t lc_gcd(const BinarySequence& seq);

struct BmResult {
    std::size_t lc = 0;
    /// Reciprocal of the connection polynomial; degree lc.
    Gf2Poly minimal_poly;
};

/// Plain Berlekamp-Massey synthesis over the given terms.
BmResult berlekamp_massey(std::span<const std::uint8_t> terms);

/// Berlekamp-Massey over two full periods, which recovers the linear
/// complexity of the periodic extension exactly.
BmResult berlekamp_massey(const BinarySequence& seq);

/// Exact LC_k for 0 <= k <= k_max (default: the weight). Each entry carries
/// a witness: among patterns achieving LC_k the one of least weight, then
/// least coefficient string. Throws ResourceLimitError("pattern_budget")
/// when sum_{j <= k_max} C(T, j) exceeds the budget.
KlcProfile klc_brute(const BinarySequence& seq, std::optional<std::size_t> k_max = std::nullopt,
                     const SearchConfig& config = {});

struct CosetResult {
    std::size_t min_weight = 0;
    ErrorWitness witness;
};

/// min over pi with deg pi < T - deg(divisor) of wt(S + divisor * pi).
/// The witness is e = S + divisor * pi, ties broken by least coefficient
/// string. divisor must divide X^T - 1. Throws
/// ResourceLimitError("coset_dim_limit") when T - deg(divisor) is too large.
CosetResult min_weight_coset(const Gf2Poly& S, const Gf2Poly& divisor, std::size_t period, const SearchConfig& config = {});

struct DivisorReport {
    /// Bit i set when factor i (X+1, Phi(p), ..., Phi(p^r)) is included.
    unsigned subset = 0;
    std::size_t degree = 0;
    std::size_t free_dim = 0;
    /// nullopt when the search was skipped for exceeding coset_dim_limit.
    std::optional<std::size_t> min_weight;
};

struct StructuredResult {
    KlcProfile profile;
    std::vector<DivisorReport> divisors;
};

/// Profile over 0 <= k <= weight from all subset products of the
/// irreducible factors of X^(p^r) - 1. Requires 2 primitive mod p^2.
StructuredResult klc_structured(const BinarySequence& seq, const SearchConfig& config = {});

/// The weight-p^(r-2)(p-1)^2/2 error that makes Phi(p^r) divide S + e, built
/// from the cyclotomic classes. Requires r >= 3.
ErrorWitness construct_optimal_error(std::uint64_t p, unsigned r);

/// Closed-form LC of the euler family. Refuses Wieferich primes.
std::uint64_t lc_formula(std::uint64_t p, unsigned r);

enum class Coverage {
    theorem,               ///< exact closed form
    bound,                 ///< interval from the recursion gap bounds
    above_theorem_range,   ///< beyond the last closed-form case, below the weight
    uncovered,             ///< recursion needs an unknown complement profile
};
std::string_view to_string(Coverage c);

struct FormulaValue {
    KlcValue value;
    Coverage coverage = Coverage::theorem;
};

/// Closed-form LC_k. Families: euler (any r >= 2), euler-complement (r = 2).
/// Requires 2 primitive mod p^2.
FormulaValue klc_formula(std::uint64_t p, unsigned r, std::size_t k, Family family);

/// Profile for 0 <= k <= k_max (default: the weight) from klc_formula, with
/// intervals tightened by monotonicity.
KlcProfile klc_formula_profile(std::uint64_t p, unsigned r, Family family, std::optional<std::size_t> k_max = std::nullopt);

/// Weight of one period of the euler / euler-complement family.
std::uint64_t family_weight(std::uint64_t p, unsigned r, Family family);

}  // namespace eqlc
