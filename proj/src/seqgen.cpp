#include "eqlc/seqgen.hpp"

#include <fstream>
#include <sstream>

#include "eqlc/cyclotomy.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/numtheory.hpp"

namespace eqlc {

namespace {

std::uint64_t sequence_modulus(std::uint64_t p, unsigned r) {
    require_odd_prime(p);
    if (r < 2) throw InvalidArgument("sequence families need r >= 2");
    [[maybe_unused]] const PrimePowerParams params(p, r);
    return checked_pow(p, r);
}

Provenance family_provenance(Family fam, std::uint64_t p, unsigned r) {
    Provenance prov;
    prov.family = fam;
    prov.p = p;
    prov.r = r;
    return prov;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw InvalidArgument("bad value for " + key + ": '" + value + "'");
    return v;
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::euler:
            return "euler";
        case Family::euler_complement:
            return "euler-complement";
        case Family::xzlh:
            return "xzlh";
        case Family::custom:
            return "custom";
    }
    return "custom";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::euler, Family::euler_complement, Family::xzlh, Family::custom})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

std::string describe(const Provenance& prov) {
    std::ostringstream os;
    os << "family=" << to_string(prov.family);
    if (prov.family == Family::custom) return os.str();
    os << " p=" << prov.p << " r=" << prov.r;
    if (prov.f) os << " f=" << *prov.f;
    if (prov.b) os << " b=" << *prov.b;
    if (prov.g) os << " g=" << *prov.g;
    return os.str();
}

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits, Provenance prov) : bits_(std::move(bits)), prov_(std::move(prov)) {
    if (bits_.empty()) throw InvalidArgument("a sequence needs period >= 1");
    for (std::uint8_t b : bits_)
        if (b > 1) throw InvalidArgument("sequence bits must be 0 or 1");
    if (prov_.family != Family::custom && bits_.size() != checked_pow(prov_.p, prov_.r))
        throw InvalidArgument("period " + std::to_string(bits_.size()) + " does not match p^r for " + describe(prov_));
}

BinarySequence BinarySequence::custom(std::vector<std::uint8_t> bits) { return BinarySequence(std::move(bits), Provenance{}); }

std::size_t weight(const BinarySequence& seq) {
    std::size_t n = 0;
    for (std::uint8_t b : seq.bits()) n += b;
    return n;
}

std::vector<std::uint8_t> euler_threshold_window(std::uint64_t p, unsigned r, std::uint64_t offset) {
    const std::uint64_t pr = sequence_modulus(p, r);
    const std::uint64_t threshold = (pr / p + 1) / 2;
    std::vector<std::uint8_t> bits(pr, 0);
    for (std::uint64_t i = 0; i < pr; ++i) {
        const std::uint64_t n = offset + i;
        bits[i] = (n % p != 0 && euler_quotient(p, r - 1, n) >= threshold) ? 1 : 0;
    }
    return bits;
}

BinarySequence gen_euler_threshold(std::uint64_t p, unsigned r) {
    return BinarySequence(euler_threshold_window(p, r, 0), family_provenance(Family::euler, p, r));
}

BinarySequence gen_euler_classes(std::uint64_t p, unsigned r) {
    const std::uint64_t pr = sequence_modulus(p, r);
    const CyclotomicPartition part = build_partition(p, r);
    std::vector<std::uint8_t> bits(pr, 0);
    for (std::size_t l = (part.class_count() + 1) / 2; l < part.class_count(); ++l)
        for (std::uint64_t u : part[l]) bits[u] = 1;
    return BinarySequence(std::move(bits), family_provenance(Family::euler, p, r));
}

BinarySequence gen_complement(std::uint64_t p, unsigned r) {
    const std::uint64_t pr = sequence_modulus(p, r);
    const CyclotomicPartition part = build_partition(p, r);
    std::vector<std::uint8_t> bits(pr, 0);
    for (std::size_t l = 0; l <= (part.class_count() - 1) / 2; ++l)
        for (std::uint64_t u : part[l]) bits[u] = 1;
    return BinarySequence(std::move(bits), family_provenance(Family::euler_complement, p, r));
}

BinarySequence gen_xzlh(std::uint64_t p, unsigned r, std::uint64_t f, std::uint64_t b, std::uint64_t g) {
    const std::uint64_t pr = sequence_modulus(p, r);
    if (b >= f * (pr / p)) throw InvalidArgument("shift b=" + std::to_string(b) + " must be below f p^(r-1)=" + std::to_string(f * (pr / p)));

    std::vector<std::uint8_t> bits(pr, 0);
    std::vector<std::uint8_t> assigned(pr, 0);
    auto assign = [&](std::uint64_t n, std::uint8_t bit) {
        if (assigned[n]) throw ConstructionError("residue " + std::to_string(n) + " assigned twice in xzlh construction");
        assigned[n] = 1;
        bits[n] = bit;
    };

    assign(0, 1);
    for (unsigned level = 1; level <= r; ++level) {
        const GeneralizedPartition gp = build_generalized(p, level, f, g % checked_pow(p, level));
        const std::uint64_t count = gp.classes.size();
        const std::uint64_t scale = checked_pow(p, r - level);
        for (std::uint64_t l = 0; l < count; ++l) {
            const std::uint8_t bit = l < count / 2 ? 1 : 0;
            for (std::uint64_t u : gp.classes[(l + b) % count]) assign(scale * u, bit);
        }
    }
    for (std::uint64_t n = 0; n < pr; ++n)
        if (!assigned[n]) throw ConstructionError("residue " + std::to_string(n) + " not covered by the xzlh classes");

    Provenance prov = family_provenance(Family::xzlh, p, r);
    prov.f = f;
    prov.b = b;
    prov.g = g;
    return BinarySequence(std::move(bits), prov);
}

void write_bitstring(std::ostream& os, const BinarySequence& seq) {
    os << "# " << describe(seq.provenance()) << '\n';
    for (std::uint8_t b : seq.bits()) os << static_cast<char>('0' + b);
    os << '\n';
}

BinarySequence read_bitstring(std::istream& is) {
    Provenance prov;
    bool have_provenance = false;
    std::optional<std::vector<std::uint8_t>> bits;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream fields(line.substr(1));
            std::string tok;
            Provenance candidate;
            bool any = false;
            while (fields >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
                if (key == "family") {
                    auto fam = parse_family(value);
                    if (!fam) throw InvalidArgument("unknown family '" + value + "'");
                    candidate.family = *fam;
                    any = true;
                } else if (key == "p") {
                    candidate.p = parse_u64(key, value);
                } else if (key == "r") {
                    candidate.r = static_cast<unsigned>(parse_u64(key, value));
                } else if (key == "f") {
                    candidate.f = parse_u64(key, value);
                } else if (key == "b") {
                    candidate.b = parse_u64(key, value);
                } else if (key == "g") {
                    candidate.g = parse_u64(key, value);
                }
            }
            if (any && !have_provenance) {
                prov = candidate;
                have_provenance = true;
            }
            continue;
        }
        if (bits) throw InvalidArgument("bitstring file has more than one data line");
        std::vector<std::uint8_t> v;
        v.reserve(line.size());
        for (char c : line) {
            if (c != '0' && c != '1') throw InvalidArgument(std::string("invalid character '") + c + "' in bitstring");
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        bits = std::move(v);
    }
    if (!bits) throw InvalidArgument("bitstring file has no data line");
    return BinarySequence(std::move(*bits), prov);
}

void write_bitstring_file(const std::string& path, const BinarySequence& seq) {
    std::ofstream os(path);
    if (!os) throw InvalidArgument("cannot open '" + path + "' for writing");
    write_bitstring(os, seq);
    if (!os) throw InvalidArgument("failed writing '" + path + "'");
}

BinarySequence read_bitstring_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InvalidArgument("cannot open '" + path + "'");
    return read_bitstring(is);
}

}  // namespace eqlc
