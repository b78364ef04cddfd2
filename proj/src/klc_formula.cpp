#include <algorithm>
#include <string>

#include "eqlc/errors.hpp"
#include "eqlc/lcanalysis.hpp"
#include "eqlc/numtheory.hpp"

namespace eqlc {

namespace {

FormulaValue exact(std::uint64_t v) { return {Exact{v}, Coverage::theorem}; }

// k-error LC of the r = 2 euler sequence.
FormulaValue euler_r2(std::uint64_t p, std::size_t k) {
    const std::uint64_t p2 = p * p;
    const std::uint64_t drop = (p - 1) * (p - 1) / 2;
    if (p % 4 == 1) return exact(k < drop ? p2 - p : 0);
    if (k == 0) return exact(p2 - 1);
    if (k < p - 1) return exact(p2 - p + 1);
    if (k < drop) return exact(p2 - p);
    return exact(0);
}

// k-error LC of the r = 2 complement sequence.
FormulaValue complement_r2(std::uint64_t p, std::size_t k) {
    const std::uint64_t p2 = p * p;
    const std::uint64_t first = (p - 1) * (p - 1) / 2;
    const std::uint64_t second = (p2 - 1) / 2;
    if (p % 4 == 1) {
        if (k == 0) return exact(p2 - 1);
        if (k < p - 1) return exact(p2 - p + 1);
        if (k < first) return exact(p2 - p);
    } else if (k < first) {
        return exact(p2 - p);
    }
    if (k < second) return exact(p - 1);
    return exact(0);
}

FormulaValue euler_general(std::uint64_t p, unsigned r, std::size_t k) {
    if (k >= family_weight(p, r, Family::euler)) return exact(0);
    if (r == 2) return euler_r2(p, k);

    const std::uint64_t pr = checked_pow(p, r);
    const std::uint64_t pr1 = pr / p;
    const std::uint64_t pr2 = pr1 / p;
    const std::uint64_t top = pr2 * (p - 1) * (p - 1) / 2;
    const std::uint64_t at_top = (p % 4 == 1 || r % 2 == 0) ? pr1 - p : pr1 - 1;
    if (k > top) return {Interval{0, at_top}, Coverage::above_theorem_range};
    if (k == top) return exact(at_top);

    if (r == 3) {
        const std::uint64_t first = (p - 1) * (p - 1) / 2;
        if (k < first) return exact(pr - p);
        if (p % 4 == 1) return exact(pr - pr1);
        if (k < (p * p - 1) / 2) return exact(pr - pr1 + p - 1);
        return exact(pr - pr1);
    }

    // r >= 4: recursion on the r-1 sequence (p = 1 mod 4) or the r-1
    // complement sequence (p = 3 mod 4) below the threshold.
    const std::uint64_t base = pr - pr1;
    const std::uint64_t threshold = p % 4 == 1 ? (pr2 - 1) * (p - 1) / 2 : (pr2 + 1) * (p - 1) / 2;
    if (k >= threshold) return exact(base);
    if (p % 4 == 3) {
        if (k == 0) return exact(lc_formula(p, r));
        return {Interval{base, lc_formula(p, r)}, Coverage::uncovered};
    }
    const FormulaValue inner = euler_general(p, r - 1, k);
    if (inner.coverage == Coverage::above_theorem_range) return {Interval{base, pr - 1}, Coverage::bound};
    if (is_exact(inner.value)) return exact(base + lower(inner.value));
    return {Interval{base + lower(inner.value), base + upper(inner.value)}, Coverage::bound};
}

}  // namespace

std::string_view to_string(Coverage c) {
    switch (c) {
        case Coverage::theorem:
            return "theorem";
        case Coverage::bound:
            return "bound";
        case Coverage::above_theorem_range:
            return "above-theorem-range";
        case Coverage::uncovered:
            return "uncovered";
    }
    return "uncovered";
}

std::uint64_t family_weight(std::uint64_t p, unsigned r, Family family) {
    require_odd_prime(p);
    if (r < 2) throw InvalidArgument("sequence families need r >= 2");
    const std::uint64_t pr1 = checked_pow(p, r - 1);
    switch (family) {
        case Family::euler:
            return (p - 1) * (pr1 - 1) / 2;
        case Family::euler_complement:
            return (p - 1) * (pr1 + 1) / 2;
        default:
            throw InvalidArgument("no weight formula for family " + std::string(to_string(family)));
    }
}

std::uint64_t lc_formula(std::uint64_t p, unsigned r) {
    require_odd_prime(p);
    if (r < 2) throw InvalidArgument("lc_formula needs r >= 2");
    if (is_wieferich_base2(p))
        throw InvalidArgument("lc_formula: 2^(p-1) = 1 mod p^2 for p=" + std::to_string(p) + "; closed form does not apply");
    const std::uint64_t pr = checked_pow(p, r);
    if (p % 4 == 3 && r % 2 == 0) return pr - 1;
    return pr - p;
}

FormulaValue klc_formula(std::uint64_t p, unsigned r, std::size_t k, Family family) {
    require_odd_prime(p);
    if (r < 2) throw InvalidArgument("klc_formula needs r >= 2");
    if (!is_two_primitive_mod_p2(p))
        throw InvalidArgument("klc_formula: 2 is not a primitive root mod p^2 for p=" + std::to_string(p));
    switch (family) {
        case Family::euler:
            return euler_general(p, r, k);
        case Family::euler_complement:
            if (r != 2) throw InvalidArgument("klc_formula: euler-complement closed form only for r=2");
            return complement_r2(p, k);
        default:
            throw InvalidArgument("klc_formula: no closed form for family " + std::string(to_string(family)));
    }
}

KlcProfile klc_formula_profile(std::uint64_t p, unsigned r, Family family, std::optional<std::size_t> k_max) {
    KlcProfile profile;
    profile.p = p;
    profile.r = r;
    profile.family = family;
    profile.period = checked_pow(p, r);
    const std::size_t last = k_max.value_or(family_weight(p, r, family));
    for (std::size_t k = 0; k <= last; ++k) {
        const FormulaValue fv = klc_formula(p, r, k, family);
        KlcEntry e;
        e.k = k;
        e.value = fv.value;
        e.method = fv.coverage == Coverage::theorem ? Method::formula : Method::bound;
        profile.entries.push_back(std::move(e));
    }
    // LC_k is nonincreasing: clip interval ends against neighbours.
    std::uint64_t cap = profile.period;
    for (auto& e : profile.entries) {
        if (auto* iv = std::get_if<Interval>(&e.value)) iv->hi = std::min(iv->hi, cap);
        cap = std::min(cap, upper(e.value));
    }
    std::uint64_t floor = 0;
    for (auto it = profile.entries.rbegin(); it != profile.entries.rend(); ++it) {
        if (auto* iv = std::get_if<Interval>(&it->value)) iv->lo = std::max(iv->lo, floor);
        floor = std::max(floor, lower(it->value));
    }
    for (auto& e : profile.entries)
        if (auto* iv = std::get_if<Interval>(&e.value); iv && iv->lo == iv->hi) e.value = Exact{iv->lo};
    return profile;
}

}  // namespace eqlc
