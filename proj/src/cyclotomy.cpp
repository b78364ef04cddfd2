#include "eqlc/cyclotomy.hpp"

#include <algorithm>
#include <sstream>

#include "eqlc/errors.hpp"
#include "eqlc/numtheory.hpp"

namespace eqlc {

namespace {

void require_sequence_params(std::uint64_t p, unsigned r) {
    require_odd_prime(p);
    if (r < 2) throw InvalidArgument("cyclotomic partition needs r >= 2");
    // validates the quotient range for index r-1 and p^r itself
    [[maybe_unused]] const PrimePowerParams params(p, r);
}

}  // namespace

CyclotomicPartition::CyclotomicPartition(std::uint64_t p, unsigned r, std::vector<std::vector<std::uint64_t>> classes)
    : p_(p), r_(r), modulus_(checked_pow(p, r)), classes_(std::move(classes)) {
    lookup_.assign(modulus_, -1);
    for (std::size_t l = 0; l < classes_.size(); ++l) {
        auto& c = classes_[l];
        std::sort(c.begin(), c.end());
        if (c.size() != p_ - 1) throw ConstructionError("class " + std::to_string(l) + " has size " + std::to_string(c.size()));
        for (std::uint64_t u : c) {
            if (u >= modulus_ || u % p_ == 0 || lookup_[u] != -1)
                throw ConstructionError("classes do not partition the units mod " + std::to_string(modulus_));
            lookup_[u] = static_cast<std::int64_t>(l);
        }
    }
    for (std::uint64_t u = 0; u < modulus_; u += p_) nonunits_.push_back(u);
    if (classes_.size() * (p_ - 1) + nonunits_.size() != modulus_)
        throw ConstructionError("classes do not cover the units mod " + std::to_string(modulus_));
}

std::optional<std::size_t> CyclotomicPartition::class_of(std::uint64_t u) const {
    if (u >= modulus_) throw RangeError("residue " + std::to_string(u) + " outside [0, " + std::to_string(modulus_) + ")");
    if (lookup_[u] < 0) return std::nullopt;
    return static_cast<std::size_t>(lookup_[u]);
}

CyclotomicPartition build_partition(std::uint64_t p, unsigned r) {
    require_sequence_params(p, r);
    const std::uint64_t pr = checked_pow(p, r);
    std::vector<std::vector<std::uint64_t>> classes(checked_pow(p, r - 1));
    for (std::uint64_t u = 1; u < pr; ++u)
        if (u % p != 0) classes[euler_quotient(p, r - 1, u)].push_back(u);
    return CyclotomicPartition(p, r, std::move(classes));
}

CyclotomicPartition build_partition_via_generator(std::uint64_t p, unsigned r, std::uint64_t g) {
    require_sequence_params(p, r);
    const std::uint64_t pr = checked_pow(p, r);
    const std::uint64_t pr1 = pr / p;
    if (!is_primitive_root(g, pr)) throw InvalidArgument(std::to_string(g) + " is not a primitive root mod " + std::to_string(pr));
    if (euler_quotient(p, r - 1, g) != 1)
        throw InvalidArgument("generator " + std::to_string(g) + " has Q_" + std::to_string(r - 1) + "(g) != 1");
    std::vector<std::vector<std::uint64_t>> classes(pr1);
    for (std::uint64_t l = 0; l < pr1; ++l)
        for (std::uint64_t k = 0; k + 1 < p; ++k) classes[l].push_back(mod_pow(g, l + k * pr1, pr));
    return CyclotomicPartition(p, r, std::move(classes));
}

std::string serialize(const CyclotomicPartition& part) {
    std::ostringstream os;
    for (std::size_t l = 0; l < part.class_count(); ++l) {
        os << l << ':';
        for (std::uint64_t u : part[l]) os << ' ' << u;
        os << '\n';
    }
    return os.str();
}

GeneralizedPartition build_generalized(std::uint64_t p, unsigned r, std::uint64_t f, std::uint64_t g) {
    require_odd_prime(p);
    if (r < 1) throw InvalidArgument("generalized classes need r >= 1");
    if (f == 0 || f % 2 != 0 || (p - 1) % f != 0)
        throw InvalidArgument("f=" + std::to_string(f) + " must be an even divisor of p-1=" + std::to_string(p - 1));
    const std::uint64_t pr = checked_pow(p, r);
    if (!is_primitive_root(g % pr, pr)) throw InvalidArgument(std::to_string(g) + " is not a primitive root mod " + std::to_string(pr));

    GeneralizedPartition out;
    out.p = p;
    out.r = r;
    out.f = f;
    out.e = (p - 1) / f;
    out.g = g;
    const std::uint64_t count = f * (pr / p);
    out.classes.resize(count);
    std::vector<bool> seen(pr, false);
    for (std::uint64_t l = 0; l < count; ++l) {
        for (std::uint64_t k = 0; k < out.e; ++k) {
            const std::uint64_t u = mod_pow(g, l + k * count, pr);
            if (seen[u]) throw ConstructionError("generalized classes overlap at " + std::to_string(u));
            seen[u] = true;
            out.classes[l].push_back(u);
        }
        std::sort(out.classes[l].begin(), out.classes[l].end());
    }
    return out;
}

}  // namespace eqlc
