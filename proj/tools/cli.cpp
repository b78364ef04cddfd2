#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "eqlc/cyclotomy.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/lcanalysis.hpp"
#include "eqlc/numtheory.hpp"
#include "eqlc/report.hpp"
#include "eqlc/seqgen.hpp"
#include "eqlc/verify.hpp"

#ifndef EQLC_GOLDEN_DIR
#define EQLC_GOLDEN_DIR "data/golden"
#endif

namespace eqlc {

namespace {

struct RunConfig {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t pattern_budget = SearchConfig{}.pattern_budget;
    unsigned coset_dim_limit = SearchConfig{}.coset_dim_limit;
    std::string format = "structured";
    std::string out_path;

    SearchConfig search() const { return {workers, pattern_budget, coset_dim_limit}; }
    bool table() const { return format == "table"; }
};

// FAMILY P R [--f --b --g] or --in FILE
struct SeqArgs {
    std::string family;
    std::uint64_t p = 0;
    unsigned r = 0;
    std::optional<std::uint64_t> f, b, g;
    std::string in_path;
};

void add_seq_args(CLI::App* cmd, SeqArgs& a, bool allow_file) {
    cmd->add_option("family", a.family, "euler | euler-complement | xzlh");
    cmd->add_option("p", a.p, "odd prime");
    cmd->add_option("r", a.r, "exponent, period p^r");
    cmd->add_option("--f", a.f, "xzlh: even divisor of p-1");
    cmd->add_option("--b", a.b, "xzlh: shift");
    cmd->add_option("--g", a.g, "xzlh: primitive root mod p^r");
    if (allow_file) cmd->add_option("--in", a.in_path, "bitstring file instead of a family spec")->check(CLI::ExistingFile);
}

BinarySequence load_sequence(const SeqArgs& a) {
    if (!a.in_path.empty()) {
        if (!a.family.empty()) throw InvalidArgument("give either FAMILY P R or --in FILE, not both");
        return read_bitstring_file(a.in_path);
    }
    if (a.family.empty() || a.p == 0 || a.r == 0) throw InvalidArgument("expected FAMILY P R");
    const auto fam = parse_family(a.family);
    if (!fam || *fam == Family::custom) throw InvalidArgument("unknown family '" + a.family + "'");
    switch (*fam) {
        case Family::euler:
            return gen_euler_threshold(a.p, a.r);
        case Family::euler_complement:
            return gen_complement(a.p, a.r);
        default:
            if (!a.f || !a.g) throw InvalidArgument("xzlh needs --f and --g");
            return gen_xzlh(a.p, a.r, *a.f, a.b.value_or(0), *a.g);
    }
}

// ---- gen ------------------------------------------------------------------

int cmd_gen(const SeqArgs& a, std::ostream& os) {
    if (!a.in_path.empty()) throw InvalidArgument("gen takes a family spec");
    write_bitstring(os, load_sequence(a));
    return kExitOk;
}

// ---- lc -------------------------------------------------------------------

int cmd_lc(const SeqArgs& a, const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    const BinarySequence seq = load_sequence(a);
    const std::size_t T = seq.period();
    const std::size_t by_gcd = lc_gcd(seq);
    const BmResult bm = berlekamp_massey(seq);
    const bool divides_period = divides(bm.minimal_poly, Gf2Poly::x_pow_minus_one(T));
    bool ok = by_gcd == bm.lc && divides_period;

    std::optional<std::uint64_t> by_formula;
    const auto& pv = seq.provenance();
    if (pv.family == Family::euler && !is_wieferich_base2(pv.p)) {
        by_formula = lc_formula(pv.p, pv.r);
        ok = ok && *by_formula == by_gcd;
    }

    if (cfg.table()) {
        os << describe(pv) << " period=" << T << '\n';
        os << "  linear complexity (gcd)  " << by_gcd << '\n';
        os << "  linear complexity (BM)   " << bm.lc << '\n';
        if (by_formula) os << "  closed form              " << *by_formula << '\n';
        os << "  minimal polynomial       " << to_string(bm.minimal_poly) << '\n';
    } else {
        os << "# eqlc lc v1\n";
        os << "source=" << describe(pv) << '\n';
        os << "period=" << T << '\n';
        os << "lc_gcd=" << by_gcd << '\n';
        os << "lc_bm=" << bm.lc << '\n';
        if (by_formula) os << "lc_formula=" << *by_formula << '\n';
        os << "minimal_poly=" << to_hex(bm.minimal_poly) << '\n';
        os << "agree=" << (ok ? "yes" : "no") << '\n';
    }
    if (!ok) {
        err << "error: linear complexity routes disagree (gcd=" << by_gcd << " bm=" << bm.lc;
        if (by_formula) err << " formula=" << *by_formula;
        err << (divides_period ? "" : ", minimal polynomial does not divide X^T-1") << ")\n";
        return kExitMismatch;
    }
    return kExitOk;
}

// ---- klc ------------------------------------------------------------------

KlcProfile truncated(KlcProfile profile, std::size_t k_hi) {
    if (profile.entries.size() > k_hi + 1) profile.entries.resize(k_hi + 1);
    return profile;
}

// Exact values win (in argument order); otherwise intersect the intervals.
KlcProfile merge(const std::vector<const KlcProfile*>& parts) {
    KlcProfile out = *parts.front();
    out.entries.clear();
    std::size_t max_k = 0;
    for (const auto* p : parts)
        if (!p->entries.empty()) max_k = std::max(max_k, p->max_k());
    for (std::size_t k = 0; k <= max_k; ++k) {
        const KlcEntry* exact = nullptr;
        std::uint64_t lo = 0, hi = UINT64_MAX;
        for (const auto* p : parts) {
            const KlcEntry* e = p->find(k);
            if (!e) continue;
            if (!exact && is_exact(e->value)) exact = e;
            lo = std::max(lo, lower(e->value));
            hi = std::min(hi, upper(e->value));
        }
        if (exact) {
            out.entries.push_back(*exact);
        } else {
            KlcEntry e;
            e.k = k;
            e.value = lo == hi ? KlcValue{Exact{lo}} : KlcValue{Interval{lo, std::max(lo, hi)}};
            e.method = Method::bound;
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

bool formula_available(const Provenance& pv) {
    if (pv.family == Family::euler) return true;
    return pv.family == Family::euler_complement && pv.r == 2;
}

int cmd_klc(const SeqArgs& a, const std::string& method, std::optional<std::size_t> k_max, const RunConfig& cfg,
            std::ostream& os, std::ostream& err) {
    const BinarySequence seq = load_sequence(a);
    const Provenance& pv = seq.provenance();
    const SearchConfig sc = cfg.search();
    const std::size_t wt = weight(seq);
    const std::size_t k_hi = k_max.value_or(wt);

    std::vector<std::string> notes;
    std::vector<KlcProfile> profiles;
    std::vector<std::string> labels;
    std::optional<StructuredResult> structured;

    const bool all = method == "all";
    if (method == "brute" || all) {
        try {
            profiles.push_back(klc_brute(seq, k_hi, sc));
            labels.emplace_back("brute");
        } catch (const ResourceLimitError& e) {
            if (!all) throw;
            notes.push_back(std::string("brute skipped: ") + e.what());
        }
    }
    if (method == "coset" || all) {
        try {
            structured = klc_structured(seq, sc);
            profiles.push_back(truncated(structured->profile, k_hi));
            labels.emplace_back("coset");
        } catch (const InvalidArgument& e) {
            if (!all) throw;
            notes.push_back(std::string("coset skipped: ") + e.what());
        }
    }
    if (method == "formula" || all) {
        if (formula_available(pv) && is_two_primitive_mod_p2(pv.p)) {
            profiles.push_back(klc_formula_profile(pv.p, pv.r, pv.family, k_hi));
            labels.emplace_back("formula");
        } else if (all) {
            notes.push_back("formula skipped: no closed form for " + describe(pv));
        } else {
            throw InvalidArgument("no closed form for " + describe(pv));
        }
    }
    if (profiles.empty()) throw ResourceLimitError("pattern_budget", "no method could run: " + notes.front());

    std::vector<std::string> problems;
    std::vector<const KlcProfile*> views;
    const std::size_t lc0 = lc_gcd(seq);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        views.push_back(&profiles[i]);
        for (auto& issue : check_profile(profiles[i], lc0, k_hi >= wt ? std::optional<std::size_t>(wt) : std::nullopt))
            problems.push_back(labels[i] + ": " + issue);
    }
    for (auto& m : cross_check(views)) problems.push_back(m);

    const KlcProfile shown = profiles.size() == 1 ? profiles.front() : merge(views);
    os << (cfg.table() ? render_table(shown) : serialize_profile(shown));
    if (structured)
        for (const auto& d : structured->divisors)
            if (!d.min_weight)
                os << "# skipped divisor subset=" << d.subset << " degree=" << d.degree << " free_dim=" << d.free_dim
                   << " (over coset_dim_limit=" << cfg.coset_dim_limit << ")\n";
    for (const auto& n : notes) os << "# " << n << '\n';
    if (all) os << "# cross-check: " << (problems.empty() ? "consistent" : "MISMATCH") << '\n';

    for (const auto& pr : problems) err << "mismatch: " << pr << '\n';
    return problems.empty() ? kExitOk : kExitMismatch;
}

// ---- classes --------------------------------------------------------------

int cmd_classes(std::uint64_t p, unsigned r, std::optional<std::uint64_t> generator, std::optional<std::uint64_t> f,
                std::ostream& os) {
    if (f) {
        if (!generator) throw InvalidArgument("--f needs --generator");
        const GeneralizedPartition gp = build_generalized(p, r, *f, *generator);
        for (std::size_t l = 0; l < gp.classes.size(); ++l) {
            os << l << ':';
            for (auto u : gp.classes[l]) os << ' ' << u;
            os << '\n';
        }
        return kExitOk;
    }
    os << serialize(generator ? build_partition_via_generator(p, r, *generator) : build_partition(p, r));
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& golden, const RunConfig& cfg, std::ostream& os) {
    std::vector<std::string_view> suites;
    if (suite == "all")
        suites = suite_names();
    else
        suites.push_back(suite);

    bool ok = true;
    for (auto name : suites) {
        const SuiteReport rep = run_suite(name, golden, cfg.search());
        std::size_t passed = 0;
        for (const auto& c : rep.checks) {
            passed += c.pass;
            os << (c.pass ? "PASS " : "FAIL ") << rep.suite << ": " << c.name << "\n     expected: " << c.expected
               << "\n     actual:   " << c.actual << '\n';
        }
        os << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size() << " passed\n";
        ok = ok && rep.passed();
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-error linear complexity of Euler-quotient binary sequences", "eqlc"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--workers", cfg.workers, "search threads (results do not depend on it)")
        ->envname("EQLC_WORKERS")
        ->check(CLI::PositiveNumber);
    app.add_option("--pattern-budget", cfg.pattern_budget, "max error patterns for brute force")
        ->envname("EQLC_PATTERN_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--coset-dim-limit", cfg.coset_dim_limit, "max free dimension for coset search")
        ->envname("EQLC_COSET_DIM_LIMIT")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "structured | table")
        ->envname("EQLC_FORMAT")
        ->check(CLI::IsMember({"structured", "table"}));
    app.add_option("--out", cfg.out_path, "write output to this file")->envname("EQLC_OUT");

    SeqArgs gen_args, lc_args, klc_args;
    auto* gen = app.add_subcommand("gen", "write a sequence as a bitstring file");
    add_seq_args(gen, gen_args, false);

    auto* lc = app.add_subcommand("lc", "linear complexity by gcd and Berlekamp-Massey");
    add_seq_args(lc, lc_args, true);

    std::string method = "all";
    std::optional<std::size_t> k_max;
    auto* klc = app.add_subcommand("klc", "k-error linear complexity profile");
    add_seq_args(klc, klc_args, true);
    klc->add_option("--method", method, "brute | coset | formula | all")
        ->envname("EQLC_METHOD")
        ->check(CLI::IsMember({"brute", "coset", "formula", "all"}));
    klc->add_option("--k-max", k_max, "largest k (default: sequence weight)")->envname("EQLC_K_MAX");

    std::uint64_t cls_p = 0;
    unsigned cls_r = 0;
    std::optional<std::uint64_t> cls_g, cls_f;
    auto* classes = app.add_subcommand("classes", "list the cyclotomic classes mod p^r");
    classes->add_option("p", cls_p)->required();
    classes->add_option("r", cls_r)->required();
    classes->add_option("--generator", cls_g, "build from powers of this generator");
    classes->add_option("--f", cls_f, "generalized classes with f | p-1 (needs --generator)");

    std::string suite = "all";
    std::string golden = EQLC_GOLDEN_DIR;
    auto* verify = app.add_subcommand("verify", "recompute the reference tables and structural checks");
    std::vector<std::string> suite_choices{"all"};
    for (auto s : suite_names()) suite_choices.emplace_back(s);
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--golden-dir", golden)->envname("EQLC_GOLDEN_DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    std::ostringstream buf;
    int code = kExitOk;
    try {
        if (*gen)
            code = cmd_gen(gen_args, buf);
        else if (*lc)
            code = cmd_lc(lc_args, cfg, buf, err);
        else if (*klc)
            code = cmd_klc(klc_args, method, k_max, cfg, buf, err);
        else if (*classes)
            code = cmd_classes(cls_p, cls_r, cls_g, cls_f, buf);
        else if (*verify)
            code = cmd_verify(suite, golden, cfg, buf);
    } catch (const ResourceLimitError& e) {
        err << "refused (" << e.limit_name() << "): " << e.what() << '\n';
        return kExitResource;
    } catch (const ConstructionError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if (cfg.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(cfg.out_path);
        if (!(file << buf.str())) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kExitInvalid;
        }
    }
    return code;
}

}  // namespace eqlc
