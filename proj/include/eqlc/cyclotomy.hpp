#pragma once

/**
 * @file cyclotomy.hpp
 * @brief Euler-quotient cyclotomic classes and their generalized refinements.
 *
 * For r >= 2 the units modulo p^r split into p^(r-1) classes
 *
 *     D_l = { u in Z*_{p^r} : Q_{r-1}(u) = l },   0 <= l < p^(r-1),
 *
 * each of size p-1. build_partition() evaluates the quotient of every unit
 * directly and is the canonical construction. build_partition_via_generator()
 * produces the same classes as cosets of a primitive root g with
 * Q_{r-1}(g) = 1; the two are tested against each other.
 *
 * Members of each class are kept sorted so that serialisation and set
 * comparison are deterministic.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqlc {

class CyclotomicPartition {
   public:
    CyclotomicPartition(std::uint64_t p, unsigned r, std::vector<std::vector<std::uint64_t>> classes);

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t modulus() const { return modulus_; }
    std::size_t class_count() const { return classes_.size(); }

    std::span<const std::uint64_t> operator[](std::size_t l) const { return classes_.at(l); }
    const std::vector<std::vector<std::uint64_t>>& classes() const { return classes_; }
    /// Multiples of p in [0, p^r).
    const std::vector<std::uint64_t>& nonunits() const { return nonunits_; }

    /// Class index of u, or nullopt when p | u. Throws RangeError for u >= p^r.
    std::optional<std::size_t> class_of(std::uint64_t u) const;

    friend bool operator==(const CyclotomicPartition& a, const CyclotomicPartition& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.classes_ == b.classes_;
    }

   private:
    std::uint64_t p_;
    unsigned r_;
    std::uint64_t modulus_;
    std::vector<std::vector<std::uint64_t>> classes_;
    std::vector<std::uint64_t> nonunits_;
    std::vector<std::int64_t> lookup_;  // -1 for nonunits
};

/// Canonical partition by direct quotient evaluation. Requires r >= 2.
CyclotomicPartition build_partition(std::uint64_t p, unsigned r);

/// D_l = { g^(l + k p^(r-1)) mod p^r : 0 <= k < p-1 }. g must be a primitive
/// root modulo p^r with Q_{r-1}(g) = 1.
CyclotomicPartition build_partition_via_generator(std::uint64_t p, unsigned r, std::uint64_t g);

inline std::optional<std::size_t> class_of(const CyclotomicPartition& part, std::uint64_t u) { return part.class_of(u); }

/// One line per class, "l: u1 u2 ... u_{p-1}".
std::string serialize(const CyclotomicPartition& part);

/// Classes D_l^{(p^r,f)} = g^l <g^(f p^(r-1))> for an even divisor f of p-1.
/// There are f p^(r-1) classes of size e = (p-1)/f.
struct GeneralizedPartition {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t f = 0;
    std::uint64_t e = 0;
    std::uint64_t g = 0;
    std::vector<std::vector<std::uint64_t>> classes;
};

/// r >= 1; g must be a primitive root modulo p^r.
GeneralizedPartition build_generalized(std::uint64_t p, unsigned r, std::uint64_t f, std::uint64_t g);

}  // namespace eqlc
