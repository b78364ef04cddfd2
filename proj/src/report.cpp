#include "eqlc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

namespace {

std::string value_text(const KlcValue& v) {
    if (is_exact(v)) return std::to_string(lower(v));
    return std::to_string(lower(v)) + ".." + std::to_string(upper(v));
}

std::string witness_text(const ErrorWitness& w) {
    const auto exps = w.error_poly.exponents();
    if (exps.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exps[i]);
    }
    return out;
}

std::optional<Method> parse_method(const std::string& s) {
    for (Method m : {Method::brute, Method::coset, Method::formula, Method::bound})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(value, &used);
        if (used == value.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("profile: bad value for " + key + ": '" + value + "'");
}

}  // namespace

std::string serialize_profile(const KlcProfile& profile) {
    std::ostringstream os;
    os << "# eqlc klc-profile v1\n";
    os << "p=" << profile.p << '\n';
    os << "r=" << profile.r << '\n';
    os << "family=" << to_string(profile.family) << '\n';
    os << "period=" << profile.period << '\n';
    os << "entries=" << profile.entries.size() << '\n';
    for (const auto& e : profile.entries) {
        os << "k=" << e.k;
        if (is_exact(e.value))
            os << " lc=" << lower(e.value);
        else
            os << " lo=" << lower(e.value) << " hi=" << upper(e.value);
        os << " method=" << to_string(e.method);
        if (e.witness) os << " witness=" << witness_text(*e.witness);
        os << '\n';
    }
    return os.str();
}

KlcProfile parse_profile(const std::string& text) {
    KlcProfile profile;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::map<std::string, std::string> kv;
        std::string tok;
        while (fields >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw InvalidArgument("profile: malformed field '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        if (kv.count("k")) {
            KlcEntry e;
            e.k = to_u64("k", kv["k"]);
            if (kv.count("lc"))
                e.value = Exact{to_u64("lc", kv["lc"])};
            else
                e.value = Interval{to_u64("lo", kv["lo"]), to_u64("hi", kv["hi"])};
            const auto m = parse_method(kv["method"]);
            if (!m) throw InvalidArgument("profile: unknown method '" + kv["method"] + "'");
            e.method = *m;
            if (kv.count("witness")) {
                ErrorWitness w;
                if (kv["witness"] != "-") {
                    std::istringstream list(kv["witness"]);
                    std::string item;
                    while (std::getline(list, item, ',')) w.error_poly.flip(to_u64("witness", item));
                }
                w.weight = w.error_poly.weight();
                w.achieved_lc = lower(e.value);
                e.witness = std::move(w);
            }
            profile.entries.push_back(std::move(e));
        } else if (kv.count("p")) {
            profile.p = to_u64("p", kv["p"]);
        } else if (kv.count("r")) {
            profile.r = static_cast<unsigned>(to_u64("r", kv["r"]));
        } else if (kv.count("family")) {
            const auto f = parse_family(kv["family"]);
            if (!f) throw InvalidArgument("profile: unknown family '" + kv["family"] + "'");
            profile.family = *f;
        } else if (kv.count("period")) {
            profile.period = to_u64("period", kv["period"]);
        }
    }
    return profile;
}

std::string render_table(const KlcProfile& profile) {
    std::ostringstream os;
    os << "k-error linear complexity  p=" << profile.p << " r=" << profile.r << " family=" << to_string(profile.family)
       << " period=" << profile.period << '\n';
    os << std::left << std::setw(14) << "k" << std::setw(14) << "LC_k" << "method\n";
    std::size_t i = 0;
    while (i < profile.entries.size()) {
        std::size_t j = i;
        while (j + 1 < profile.entries.size() && profile.entries[j + 1].value == profile.entries[i].value &&
               profile.entries[j + 1].method == profile.entries[i].method)
            ++j;
        std::string range = std::to_string(profile.entries[i].k);
        if (j > i) range += ".." + std::to_string(profile.entries[j].k);
        os << std::setw(14) << range << std::setw(14) << value_text(profile.entries[i].value) << to_string(profile.entries[i].method)
           << '\n';
        i = j + 1;
    }
    return os.str();
}

std::string render_values(const KlcProfile& profile, std::optional<std::size_t> k_hi) {
    std::ostringstream os;
    os << "# p=" << profile.p << " r=" << profile.r << " family=" << to_string(profile.family) << '\n';
    for (const auto& e : profile.entries) {
        if (k_hi && e.k > *k_hi) break;
        os << e.k << ' ' << value_text(e.value) << '\n';
    }
    return os.str();
}

std::vector<std::string> check_profile(const KlcProfile& profile, std::optional<std::size_t> lc0, std::optional<std::size_t> weight) {
    std::vector<std::string> out;
    std::uint64_t min_hi = UINT64_MAX;
    std::size_t min_hi_k = 0;
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        const auto& e = profile.entries[i];
        if (e.k != i) out.push_back("entry " + std::to_string(i) + " has k=" + std::to_string(e.k));
        if (lower(e.value) > upper(e.value)) out.push_back("k=" + std::to_string(e.k) + ": lo > hi");
        if (profile.period && upper(e.value) > profile.period) out.push_back("k=" + std::to_string(e.k) + ": value exceeds the period");
        if (lower(e.value) > min_hi)
            out.push_back("k=" + std::to_string(e.k) + ": lower bound " + std::to_string(lower(e.value)) + " exceeds value at k=" +
                          std::to_string(min_hi_k) + " (" + std::to_string(min_hi) + ")");
        if (upper(e.value) < min_hi) {
            min_hi = upper(e.value);
            min_hi_k = e.k;
        }
        if (e.witness && e.witness->weight > e.k)
            out.push_back("k=" + std::to_string(e.k) + ": witness weight " + std::to_string(e.witness->weight) + " exceeds k");
    }
    if (lc0 && !profile.entries.empty() && profile.entries[0].value != KlcValue{Exact{*lc0}})
        out.push_back("k=0 does not equal the linear complexity " + std::to_string(*lc0));
    if (weight) {
        if (const auto* e = profile.find(*weight); e && e->value != KlcValue{Exact{0}})
            out.push_back("k=weight=" + std::to_string(*weight) + " is not 0");
    }
    return out;
}

std::vector<std::string> cross_check(const std::vector<const KlcProfile*>& profiles) {
    std::vector<std::string> out;
    std::size_t max_k = 0;
    for (const auto* p : profiles)
        if (!p->entries.empty()) max_k = std::max(max_k, p->max_k());
    for (std::size_t k = 0; k <= max_k; ++k) {
        std::uint64_t lo = 0, hi = UINT64_MAX;
        std::string seen;
        for (const auto* p : profiles) {
            const auto* e = p->find(k);
            if (!e) continue;
            lo = std::max(lo, lower(e->value));
            hi = std::min(hi, upper(e->value));
            seen += " " + std::string(to_string(e->method)) + "=" + value_text(e->value);
        }
        if (lo > hi) out.push_back("k=" + std::to_string(k) + ": methods disagree:" + seen);
    }
    return out;
}

}  // namespace eqlc
