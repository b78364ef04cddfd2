#include "eqlc/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "eqlc/cyclotomy.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/numtheory.hpp"
#include "eqlc/report.hpp"
#include "eqlc/seqgen.hpp"

namespace eqlc {

namespace {

std::optional<std::string> slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "k v" lines folded to one line for the report: "0:24 1:24 ..."
std::string compact(const std::string& doc) {
    std::istringstream is(doc);
    std::string line, out;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        const auto sp = line.find(' ');
        if (!out.empty()) out += ' ';
        out += line.substr(0, sp) + ":" + line.substr(sp + 1);
    }
    return out;
}

std::size_t data_lines(const std::string& doc) {
    std::istringstream is(doc);
    std::string line;
    std::size_t n = 0;
    while (std::getline(is, line))
        if (!line.empty() && line.front() != '#') ++n;
    return n;
}

class Suite {
public:
    Suite(std::string name, std::filesystem::path golden) : golden_(std::move(golden)) { report_.suite = std::move(name); }

    void check(std::string name, const std::string& expected, const std::string& actual) {
        report_.checks.push_back({std::move(name), expected, actual, expected == actual});
    }
    void check(std::string name, std::uint64_t expected, std::uint64_t actual) {
        check(std::move(name), std::to_string(expected), std::to_string(actual));
    }
    void check_true(std::string name, bool ok, const std::string& detail) {
        report_.checks.push_back({std::move(name), "holds", ok ? "holds" : detail, ok});
    }

    // Byte-exact comparison of a rendered profile with a golden values file.
    void golden_profile(const std::string& name, const KlcProfile& profile, const std::string& file) {
        const auto doc = slurp(golden_ / file);
        if (!doc) {
            report_.checks.push_back({name, "golden " + file, "missing file " + (golden_ / file).string(), false});
            return;
        }
        const std::size_t n = data_lines(*doc);
        const std::string mine = n ? render_values(profile, n - 1) : render_values(profile);
        report_.checks.push_back({name, compact(*doc), compact(mine), mine == *doc});
    }

    // Listed classes ("l: u1 u2 ...") must equal the computed ones as sets.
    void golden_classes(const std::string& name, const CyclotomicPartition& part, const std::string& file) {
        const auto doc = slurp(golden_ / file);
        if (!doc) {
            report_.checks.push_back({name, "golden " + file, "missing file " + (golden_ / file).string(), false});
            return;
        }
        std::istringstream is(*doc);
        std::string line;
        std::string expected, actual;
        bool ok = true;
        while (std::getline(is, line)) {
            if (line.empty() || line.front() == '#') continue;
            std::istringstream fields(line);
            std::size_t l = 0;
            char colon = 0;
            fields >> l >> colon;
            std::set<std::uint64_t> want, got;
            for (std::uint64_t u; fields >> u;) want.insert(u);
            if (l < part.class_count()) got.insert(part[l].begin(), part[l].end());
            auto fmt = [&](const std::set<std::uint64_t>& s) {
                std::string t = "D" + std::to_string(l) + "={";
                for (auto it = s.begin(); it != s.end(); ++it) t += (it == s.begin() ? "" : ",") + std::to_string(*it);
                return t + "}";
            };
            expected += (expected.empty() ? "" : " ") + fmt(want);
            actual += (actual.empty() ? "" : " ") + fmt(got);
            ok = ok && want == got;
        }
        report_.checks.push_back({name, expected, actual, ok});
    }

    void no_issues(const std::string& name, const std::vector<std::string>& issues) {
        check_true(name, issues.empty(), issues.empty() ? "" : issues.front());
    }

    SuiteReport take() { return std::move(report_); }

private:
    std::filesystem::path golden_;
    SuiteReport report_;
};

KlcProfile truncated(KlcProfile profile, std::size_t k_hi) {
    if (profile.entries.size() > k_hi + 1) profile.entries.resize(k_hi + 1);
    return profile;
}

std::string golden_name(const BinarySequence& seq) {
    const auto& pv = seq.provenance();
    return "p" + std::to_string(pv.p) + "r" + std::to_string(pv.r) + "_" + std::string(to_string(pv.family)) + ".txt";
}

// brute + structured + formula against each other and against the golden table
void profile_bundle(Suite& suite, const BinarySequence& seq, std::size_t k_hi, const SearchConfig& config) {
    const auto& pv = seq.provenance();
    const std::string tag = std::string(to_string(pv.family)) + "(" + std::to_string(pv.p) + "," + std::to_string(pv.r) + ")";
    const std::size_t wt = weight(seq);
    const std::size_t lc = lc_gcd(seq);

    const KlcProfile brute = klc_brute(seq, wt, config);
    const KlcProfile formula = klc_formula_profile(pv.p, pv.r, pv.family);
    const KlcProfile structured = klc_structured(seq, config).profile;

    suite.golden_profile(tag + " brute table", truncated(brute, k_hi), golden_name(seq));
    suite.golden_profile(tag + " formula table", truncated(formula, k_hi), golden_name(seq));
    suite.no_issues(tag + " brute invariants", check_profile(brute, lc, wt));
    suite.no_issues(tag + " structured invariants", check_profile(structured, lc, wt));
    suite.no_issues(tag + " brute/structured/formula agree", cross_check({&brute, &structured, &formula}));
}

SuiteReport suite_p3r3(const std::filesystem::path& golden, const SearchConfig& config) {
    Suite s("p3r3", golden);
    s.golden_classes("classes at 27 (g=11 listing)", build_partition(3, 3), "classes_p3r3.txt");
    s.check("generator of the listing", 11, find_generator(3, 3));
    const auto seq = gen_euler_threshold(3, 3);
    s.check("linear complexity", lc_formula(3, 3), lc_gcd(seq));
    profile_bundle(s, seq, 6, config);

    const auto S = Gf2Poly::from_bits(seq.bits());
    const auto coset = min_weight_coset(S, cyclotomic_factor(3, 3), 27, config);
    s.check("coset minimum for Phi(27)", 6, coset.min_weight);
    const auto e = construct_optimal_error(3, 3);
    s.check("constructed error weight", 6, e.weight);
    s.check("constructed error LC", 8, e.achieved_lc);
    return s.take();
}

SuiteReport suite_p5r2(const std::filesystem::path& golden, const SearchConfig& config) {
    Suite s("p5r2", golden);
    for (std::uint64_t p : {5u, 3u}) {
        const auto seq = gen_euler_threshold(p, 2);
        s.check("linear complexity p=" + std::to_string(p), lc_formula(p, 2), lc_gcd(seq));
        profile_bundle(s, seq, weight(seq), config);
    }
    return s.take();
}

SuiteReport suite_p5r3(const std::filesystem::path& golden, const SearchConfig& config) {
    Suite s("p5r3", golden);
    s.golden_classes("classes at 125 (g=3 listing)", build_partition(5, 3), "classes_p5r3.txt");
    s.check("generator of the listing", 3, find_generator(5, 3));
    const auto seq = gen_euler_threshold(5, 3);
    s.check("linear complexity", lc_formula(5, 3), lc_gcd(seq));
    const KlcProfile formula = klc_formula_profile(5, 3, Family::euler, 40);
    s.golden_profile("formula table", formula, "p5r3_euler.txt");

    const auto S = Gf2Poly::from_bits(seq.bits());
    const auto coset = min_weight_coset(S, cyclotomic_factor(5, 3), 125, config);
    s.check("coset minimum for Phi(125)", 40, coset.min_weight);
    s.check("coset witness LC", 20, coset.witness.achieved_lc);
    const auto e = construct_optimal_error(5, 3);
    s.check("constructed error weight", 40, e.weight);
    s.check("constructed error LC", 20, e.achieved_lc);

    const KlcProfile structured = klc_structured(seq, config).profile;
    const KlcProfile full = klc_formula_profile(5, 3, Family::euler);
    s.no_issues("structured invariants", check_profile(structured, lc_gcd(seq), weight(seq)));
    s.no_issues("structured/formula agree", cross_check({&structured, &full}));
    const auto* at40 = structured.find(40);
    s.check("structured k=40", "20", at40 && is_exact(at40->value) ? std::to_string(lower(at40->value)) : "not exact");
    return s.take();
}

SuiteReport suite_complement(const std::filesystem::path& golden, const SearchConfig& config) {
    Suite s("complement", golden);
    profile_bundle(s, gen_complement(5, 2), 12, config);

    // no golden table for p = 3; brute force against the closed form
    const auto seq = gen_complement(3, 2);
    const KlcProfile brute = klc_brute(seq, std::nullopt, config);
    const KlcProfile formula = klc_formula_profile(3, 2, Family::euler_complement);
    s.no_issues("euler-complement(3,2) brute/formula agree", cross_check({&brute, &formula}));
    s.no_issues("euler-complement(3,2) brute invariants", check_profile(brute, lc_gcd(seq), weight(seq)));
    return s.take();
}

// ---- lemmas ---------------------------------------------------------------

std::string first_failure(const std::vector<std::string>& fails, std::size_t total) {
    if (fails.empty()) return "";
    return std::to_string(fails.size()) + "/" + std::to_string(total) + " fail, e.g. " + fails.front();
}

SuiteReport suite_lemmas(const std::filesystem::path& golden) {
    Suite s("lemmas", golden);

    // Q_r(u + k p^r) = Q_r(u) - k p^{r-1} u^{-1}  (mod p^r)
    for (std::uint64_t p : {3u, 5u})
        for (unsigned r = 1; r <= 3; ++r) {
            const std::uint64_t pr = checked_pow(p, r), pr1 = pr / p;
            std::vector<std::string> fails;
            std::size_t total = 0;
            for (std::uint64_t u = 1; u < pr; ++u) {
                if (u % p == 0) continue;
                const std::uint64_t inv = mod_inverse(u, pr);
                for (std::uint64_t k = 0; k < p; ++k, ++total) {
                    const std::uint64_t want = (euler_quotient(p, r, u) + pr - (k * pr1 % pr) * inv % pr) % pr;
                    if (euler_quotient(p, r, u + k * pr) != want) fails.push_back("u=" + std::to_string(u) + " k=" + std::to_string(k));
                }
            }
            s.check_true("additive law p=" + std::to_string(p) + " r=" + std::to_string(r), fails.empty(), first_failure(fails, total));
        }

    // threshold form and class-union form generate the same bits
    for (std::uint64_t p : {3u, 5u, 7u, 11u})
        for (unsigned r : {2u, 3u}) {
            const bool same = gen_euler_threshold(p, r).bits().size() == gen_euler_classes(p, r).bits().size() &&
                              std::ranges::equal(gen_euler_threshold(p, r).bits(), gen_euler_classes(p, r).bits());
            s.check_true("threshold = class union p=" + std::to_string(p) + " r=" + std::to_string(r), same, "sequences differ");
        }

    for (std::uint64_t p : {3u, 5u}) {
        const std::string P = "p=" + std::to_string(p);
        // projection of classes one level down, and onto residues mod p
        for (unsigned r : {2u, 3u}) {
            const auto upper = build_partition(p, r + 1);
            const auto lower_part = build_partition(p, r);
            const std::uint64_t pr = checked_pow(p, r), pr1 = pr / p;
            std::vector<std::string> fails;
            for (std::size_t l = 0; l < upper.class_count(); ++l) {
                std::set<std::uint64_t> proj;
                for (auto u : upper[l]) proj.insert(u % pr);
                const std::set<std::uint64_t> want(lower_part[l % pr1].begin(), lower_part[l % pr1].end());
                if (proj != want) fails.push_back("l=" + std::to_string(l));
            }
            s.check_true("class projection " + P + " r=" + std::to_string(r + 1) + "->" + std::to_string(r), fails.empty(),
                         first_failure(fails, upper.class_count()));

            std::vector<std::string> fails_p;
            for (std::size_t l = 0; l < lower_part.class_count(); ++l) {
                std::set<std::uint64_t> res;
                for (auto u : lower_part[l]) res.insert(u % p);
                if (res.size() != p - 1 || res.count(0)) fails_p.push_back("l=" + std::to_string(l));
            }
            s.check_true("classes cover 1..p-1 mod p " + P + " r=" + std::to_string(r), fails_p.empty(),
                         first_failure(fails_p, lower_part.class_count()));
        }

        // fibers v + j p^2 meet every class D_{l + i p} at p^3 exactly once
        {
            const std::uint64_t p2 = p * p;
            const auto part = build_partition(p, 3);
            std::vector<std::string> fails;
            std::size_t total = 0;
            for (std::uint64_t v = 1; v < p2; ++v) {
                if (v % p == 0) continue;
                ++total;
                const std::uint64_t ell = euler_quotient(p, 2, v);
                std::map<std::size_t, int> hits;
                for (std::uint64_t j = 0; j < p; ++j) ++hits[*part.class_of(v + j * p2)];
                bool ok = hits.size() == p;
                for (std::uint64_t i = 0; i < p; ++i) ok = ok && hits[(ell + i * p) % p2] == 1;
                if (!ok) fails.push_back("v=" + std::to_string(v));
            }
            s.check_true("fiber meets each class once " + P, fails.empty(), first_failure(fails, total));
        }

        // fibers v + j p^2 in Z_{p^3}: (p+1)/2 zeros when j-part of Q_2(v) is small
        {
            const std::uint64_t p2 = p * p;
            const auto seq = gen_euler_threshold(p, 3);
            std::vector<std::string> fails;
            std::size_t total = 0;
            for (std::uint64_t v = 1; v < p2; ++v) {
                if (v % p == 0) continue;
                ++total;
                const std::uint64_t j = euler_quotient(p, 2, v) % p;
                std::uint64_t zeros = 0;
                for (std::uint64_t t = 0; t < p; ++t) zeros += seq[v + t * p2] == 0;
                const std::uint64_t want = j <= (p - 1) / 2 ? (p + 1) / 2 : (p - 1) / 2;
                if (zeros != want) fails.push_back("v=" + std::to_string(v));
            }
            s.check_true("fiber zero/one split " + P, fails.empty(), first_failure(fails, total));
        }

        // S^(p^3) mod X^{p^2}-1 is S^(p^2) (p = 1 mod 4) or its complement (p = 3 mod 4)
        {
            const auto big = Gf2Poly::from_bits(gen_euler_threshold(p, 3).bits());
            const auto small = p % 4 == 1 ? gen_euler_threshold(p, 2) : gen_complement(p, 2);
            const auto reduced = rem(big, Gf2Poly::x_pow_minus_one(p * p));
            s.check("reduction mod X^{p^2}-1 " + P, to_string(Gf2Poly::from_bits(small.bits())), to_string(reduced));
        }

        // summing the p classes above one residue class gives full fibers
        for (unsigned r : {3u, 4u}) {
            const auto part = build_partition(p, r);
            const std::uint64_t q = checked_pow(p, r - 1), step = q / p;
            const auto phi = cyclotomic_factor(p, r);
            std::vector<std::string> fails;
            for (std::uint64_t ell = 0; ell < q; ++ell) {
                Gf2Poly sum;
                for (std::uint64_t i = 0; i < p; ++i)
                    for (auto u : part[(ell + i * step) % q]) sum.flip(u);
                if (!divides(phi, sum)) fails.push_back("l=" + std::to_string(ell));
            }
            s.check_true("class sums divisible by Phi(p^" + std::to_string(r) + ") " + P, fails.empty(), first_failure(fails, q));
        }
    }
    return s.take();
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"p3r3", "p5r2", "p5r3", "complement", "lemmas"};
    return names;
}

SuiteReport run_suite(std::string_view suite, const std::filesystem::path& golden_dir, const SearchConfig& config) {
    if (suite == "p3r3") return suite_p3r3(golden_dir, config);
    if (suite == "p5r2") return suite_p5r2(golden_dir, config);
    if (suite == "p5r3") return suite_p5r3(golden_dir, config);
    if (suite == "complement") return suite_complement(golden_dir, config);
    if (suite == "lemmas") return suite_lemmas(golden_dir);
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace eqlc
