#pragma once

/**
 * @file seqgen.hpp
 * @brief One period of the Euler-quotient sequence families.
 *
 *  - euler:            s_n = 1 iff n is a unit mod p^r and
 *                      Q_{r-1}(n) >= (p^(r-1)+1)/2. Multiples of p map to 0.
 *  - euler-complement: 1 iff n is a unit with Q_{r-1}(n) <= (p^(r-1)-1)/2.
 *                      Not the bitwise complement: multiples of p are 0 in
 *                      both families.
 *  - xzlh:             generalized cyclotomic sequence on every level
 *                      p^(r-r') Z*_{p^r'}, parameterised by an even f | p-1,
 *                      a shift b and a primitive root g; t_0 = 1.
 */

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqlc {

enum class Family { euler, euler_complement, xzlh, custom };

std::string_view to_string(Family f);
/// Accepts "euler", "euler-complement", "xzlh", "custom".
std::optional<Family> parse_family(std::string_view s);

struct Provenance {
    Family family = Family::custom;
    std::uint64_t p = 0;
    unsigned r = 0;
    // xzlh only
    std::optional<std::uint64_t> f;
    std::optional<std::uint64_t> b;
    std::optional<std::uint64_t> g;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// "family=euler p=3 r=3" (plus f/b/g for xzlh); "family=custom" otherwise.
std::string describe(const Provenance& prov);

class BinarySequence {
   public:
    BinarySequence(std::vector<std::uint8_t> bits, Provenance prov);

    /// A sequence with family=custom. Bits must be 0 or 1.
    static BinarySequence custom(std::vector<std::uint8_t> bits);

    std::size_t period() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t n) const { return bits_[n % bits_.size()]; }
    std::span<const std::uint8_t> bits() const { return bits_; }
    const Provenance& provenance() const { return prov_; }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

   private:
    std::vector<std::uint8_t> bits_;
    Provenance prov_;
};

std::size_t weight(const BinarySequence& seq);

/// Threshold form: compares Q_{r-1}(n) against (p^(r-1)+1)/2 directly.
BinarySequence gen_euler_threshold(std::uint64_t p, unsigned r);
/// Class form: ones on the upper half of the cyclotomic classes.
BinarySequence gen_euler_classes(std::uint64_t p, unsigned r);
BinarySequence gen_complement(std::uint64_t p, unsigned r);
BinarySequence gen_xzlh(std::uint64_t p, unsigned r, std::uint64_t f, std::uint64_t b, std::uint64_t g);

/// Regenerates the euler family for indices [offset, offset + p^r) straight
/// from the quotient, without reducing n mod p^r first.
std::vector<std::uint8_t> euler_threshold_window(std::uint64_t p, unsigned r, std::uint64_t offset);

// Bitstring files: optional '#' comment lines (the first of the form
// "# family=... p=... r=..." carries provenance), then one line of '0'/'1'.

void write_bitstring(std::ostream& os, const BinarySequence& seq);
BinarySequence read_bitstring(std::istream& is);
void write_bitstring_file(const std::string& path, const BinarySequence& seq);
BinarySequence read_bitstring_file(const std::string& path);

}  // namespace eqlc
