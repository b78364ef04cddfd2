#include <algorithm>
#include <limits>
#include <string>

#include "bitvec.hpp"
#include "eqlc/cyclotomy.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/lcanalysis.hpp"
#include "eqlc/numtheory.hpp"
#include "parallel.hpp"

namespace eqlc {

namespace {

using detail::Word;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct PrimePower {
    std::uint64_t p;
    unsigned r;
};

// (p, r) when the period is p^r and every factor of X^T - 1 listed by
// period_factors() is irreducible.
std::optional<PrimePower> irreducible_structure(std::size_t period) {
    const auto f = factorize(period);
    if (f.size() != 1 || f[0].first == 2 || f[0].first > kMaxPrime) return std::nullopt;
    if (!is_irreducible_context(f[0].first)) return std::nullopt;
    return PrimePower{f[0].first, f[0].second};
}

// Maps error positions to vectors whose zero pattern decides the linear
// complexity. With irreducible factors f_i of X^T - 1 each position n is
// stored as the concatenation of X^n mod f_i (total width T bits); a factor
// divides S + e exactly when its segment of base ^ (xor of positions) is
// zero. Otherwise positions are plain unit vectors and a full gcd is taken.
class PatternEvaluator {
   public:
    PatternEvaluator(const Gf2Poly& S, std::size_t period) : period_(period), width_(detail::words_for(period)) {
        base_.assign(width_, 0);
        positions_.assign(period_ * width_, 0);
        const auto structure = irreducible_structure(period);
        if (!structure) {
            base_ = detail::to_words(S, width_);
            for (std::size_t n = 0; n < period_; ++n) detail::set_bit(&positions_[n * width_], n);
            return;
        }
        factored_ = true;
        std::size_t offset = 0;
        for (const Gf2Poly& f : period_factors(structure->p, structure->r)) {
            const std::size_t deg = f.degree().value();
            std::vector<Word> seg(width_, 0);
            for (std::size_t i = 0; i < deg; ++i) detail::set_bit(seg.data(), offset + i);
            segments_.insert(segments_.end(), seg.begin(), seg.end());
            segment_degrees_.push_back(deg);

            for (std::size_t e : rem(S, f).exponents()) detail::set_bit(base_.data(), offset + e);
            Gf2Poly cur = Gf2Poly::one();
            for (std::size_t n = 0; n < period_; ++n) {
                for (std::size_t e : cur.exponents()) detail::set_bit(&positions_[n * width_], offset + e);
                cur = cur.shifted(1);
                if (cur.coeff(deg)) cur += f;
            }
            offset += deg;
        }
        if (offset != period_) throw ConstructionError("factor degrees do not sum to the period");
    }

    std::size_t width() const { return width_; }
    const Word* base() const { return base_.data(); }
    const Word* position(std::size_t n) const { return &positions_[n * width_]; }

    std::size_t lc(const Word* v) const {
        if (!factored_) return linear_complexity(Gf2Poly::from_words(std::vector<Word>(v, v + width_)), period_);
        std::size_t divisor_degree = 0;
        for (std::size_t i = 0; i < segment_degrees_.size(); ++i)
            if (detail::all_zero_masked(v, &segments_[i * width_], width_)) divisor_degree += segment_degrees_[i];
        return period_ - divisor_degree;
    }

   private:
    std::size_t period_;
    std::size_t width_;
    bool factored_ = false;
    std::vector<Word> base_;
    std::vector<Word> positions_;
    std::vector<Word> segments_;
    std::vector<std::size_t> segment_degrees_;
};

// Coefficient-string order on sorted supports.
bool support_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else {
            return b[j] < a[i];
        }
    }
    return j < b.size();
}

struct WeightBest {
    std::size_t lc = kNone;
    std::vector<std::uint32_t> support;

    void offer(std::size_t lc_value, const std::vector<std::uint32_t>& s) {
        if (lc_value < lc || (lc_value == lc && support_less(s, support))) {
            lc = lc_value;
            support = s;
        }
    }
};

class BruteWorker {
   public:
    BruteWorker(const PatternEvaluator& ev, std::size_t period, std::size_t k_max)
        : ev_(ev), period_(period), k_max_(k_max), best_(k_max + 1), stack_((k_max + 1) * ev.width(), 0) {}

    // Evaluates the pattern `prefix` and every extension of it by larger
    // positions up to k_max.
    void run(const std::vector<std::uint32_t>& prefix) {
        const std::size_t w = ev_.width();
        std::copy(ev_.base(), ev_.base() + w, &stack_[prefix.size() * w]);
        for (std::uint32_t c : prefix) detail::xor_into(&stack_[prefix.size() * w], ev_.position(c), w);
        support_ = prefix;
        consider();
        extend(prefix.empty() ? 0 : prefix.back() + 1);
    }

    const std::vector<WeightBest>& best() const { return best_; }

   private:
    void consider() {
        const std::size_t depth = support_.size();
        best_[depth].offer(ev_.lc(&stack_[depth * ev_.width()]), support_);
    }

    void extend(std::size_t start) {
        const std::size_t depth = support_.size();
        if (depth == k_max_) return;
        const std::size_t w = ev_.width();
        Word* next = &stack_[(depth + 1) * w];
        const Word* cur = &stack_[depth * w];
        for (std::size_t c = start; c < period_; ++c) {
            for (std::size_t i = 0; i < w; ++i) next[i] = cur[i] ^ ev_.position(c)[i];
            support_.push_back(static_cast<std::uint32_t>(c));
            consider();
            extend(c + 1);
            support_.pop_back();
        }
    }

    const PatternEvaluator& ev_;
    std::size_t period_;
    std::size_t k_max_;
    std::vector<WeightBest> best_;
    std::vector<Word> stack_;
    std::vector<std::uint32_t> support_;
};

ErrorWitness witness_from_support(const std::vector<std::uint32_t>& support, std::size_t lc) {
    ErrorWitness w;
    for (std::uint32_t e : support) w.error_poly.flip(e);
    w.weight = support.size();
    w.achieved_lc = lc;
    return w;
}

// Smallest k whose cumulative pattern count sum_{j<=k} C(T, j) exceeds the
// budget, or nullopt if k_max fits.
std::optional<std::size_t> first_over_budget(std::size_t period, std::size_t k_max, std::uint64_t budget, u128& total) {
    const u128 cap = static_cast<u128>(1) << 100;
    u128 binom = 1;
    total = 0;
    for (std::size_t j = 0; j <= k_max; ++j) {
        if (j > 0) binom = std::min(cap, binom * (period - j + 1) / j);
        total = std::min(cap, total + binom);
        if (total > budget) return j;
    }
    return std::nullopt;
}

// Least weight first, then least coefficient string.
bool witness_less(const ErrorWitness& a, const ErrorWitness& b, std::size_t period) {
    if (a.weight != b.weight) return a.weight < b.weight;
    const std::size_t width = detail::words_for(period);
    return detail::coeff_string_less(detail::to_words(a.error_poly, width).data(), detail::to_words(b.error_poly, width).data(), width);
}

}  // namespace

KlcProfile klc_brute(const BinarySequence& seq, std::optional<std::size_t> k_max_opt, const SearchConfig& config) {
    const std::size_t period = seq.period();
    const std::size_t wt = weight(seq);
    const std::size_t k_max = k_max_opt.value_or(wt);
    const std::size_t k_search = std::min(k_max, wt);

    u128 total = 0;
    if (const auto bad = first_over_budget(period, k_search, config.pattern_budget, total))
        throw ResourceLimitError("pattern_budget", "klc_brute: k=" + std::to_string(*bad) + " needs more than pattern_budget=" +
                                                       std::to_string(config.pattern_budget) + " error patterns at period " +
                                                       std::to_string(period));

    const Gf2Poly S = Gf2Poly::from_bits(seq.bits());
    const PatternEvaluator ev(S, period);

    // Patterns shorter than the prefix length are handled by the caller
    // thread; every longer pattern belongs to exactly one prefix task.
    const std::size_t prefix_len = std::min<std::size_t>(2, k_search);
    std::vector<std::vector<std::uint32_t>> tasks;
    if (prefix_len == 0) {
        tasks.push_back({});
    } else if (prefix_len == 1) {
        for (std::uint32_t a = 0; a < period; ++a) tasks.push_back({a});
    } else {
        for (std::uint32_t a = 0; a < period; ++a)
            for (std::uint32_t b = a + 1; b < period; ++b) tasks.push_back({a, b});
    }

    std::vector<WeightBest> best(k_search + 1);
    {
        BruteWorker head(ev, period, 0);
        head.run({});
        best[0] = head.best()[0];
        if (prefix_len == 2) {
            for (std::uint32_t a = 0; a < period; ++a) {
                BruteWorker single(ev, period, 1);
                single.run({a});
                best[1].offer(single.best()[1].lc, single.best()[1].support);
            }
        }
    }

    const unsigned workers = std::max(1u, config.workers);
    std::vector<BruteWorker> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(ev, period, k_search);
    detail::run_tasks(prefix_len == 0 ? 0 : tasks.size(), workers, [&](std::size_t t, unsigned w) { pool[w].run(tasks[t]); });
    for (const auto& worker : pool)
        for (std::size_t j = 0; j <= k_search; ++j)
            if (worker.best()[j].lc != kNone) best[j].offer(worker.best()[j].lc, worker.best()[j].support);

    KlcProfile profile;
    profile.p = seq.provenance().p;
    profile.r = seq.provenance().r;
    profile.family = seq.provenance().family;
    profile.period = period;
    std::size_t run_best = kNone;
    std::size_t run_weight = 0;
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k <= k_search && best[k].lc < run_best) {
            run_best = best[k].lc;
            run_weight = k;
        }
        KlcEntry entry;
        entry.k = k;
        entry.value = Exact{run_best};
        entry.method = Method::brute;
        entry.witness = witness_from_support(best[run_weight].support, run_best);
        profile.entries.push_back(std::move(entry));
    }
    return profile;
}

CosetResult min_weight_coset(const Gf2Poly& S, const Gf2Poly& divisor, std::size_t period, const SearchConfig& config) {
    if (period == 0) throw InvalidArgument("period must be >= 1");
    if (divisor.is_zero()) throw InvalidArgument("coset divisor must be nonzero");
    if (!S.is_zero() && S.degree().value() >= period) throw InvalidArgument("S must have degree below the period");
    if (!divides(divisor, Gf2Poly::x_pow_minus_one(period))) throw InvalidArgument("coset divisor must divide X^T - 1");

    const std::size_t free_dim = period - divisor.degree().value();
    if (free_dim > config.coset_dim_limit)
        throw ResourceLimitError("coset_dim_limit", "min_weight_coset: free dimension m=" + std::to_string(free_dim) +
                                                        " exceeds coset_dim_limit=" + std::to_string(config.coset_dim_limit));

    const std::size_t width = detail::words_for(period);
    std::vector<Word> shifted(free_dim * width, 0);
    for (std::size_t i = 0; i < free_dim; ++i) {
        const auto w = detail::to_words(divisor.shifted(i), width);
        std::copy(w.begin(), w.end(), &shifted[i * width]);
    }
    const std::vector<Word> base = detail::to_words(S, width);

    // The top `high` bits of pi select a chunk; the rest are walked in Gray
    // code order so each step is a single shifted-divisor xor.
    const std::size_t high = free_dim >= 16 ? 8 : 0;
    const std::size_t low = free_dim - high;

    struct Best {
        std::size_t weight = kNone;
        std::vector<Word> e;
    };
    const unsigned workers = std::max(1u, config.workers);
    std::vector<Best> best(workers);
    for (auto& b : best) b.e.assign(width, 0);

    detail::run_tasks(std::size_t{1} << high, workers, [&](std::size_t chunk, unsigned w) {
        Best& b = best[w];
        std::vector<Word> v = base;
        for (std::size_t j = 0; j < high; ++j)
            if ((chunk >> j) & 1u) detail::xor_into(v.data(), &shifted[(low + j) * width], width);
        auto offer = [&] {
            const std::size_t wt = detail::popcount(v.data(), width);
            if (wt < b.weight || (wt == b.weight && detail::coeff_string_less(v.data(), b.e.data(), width))) {
                b.weight = wt;
                b.e = v;
            }
        };
        offer();
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t t = 1; t < steps; ++t) {
            detail::xor_into(v.data(), &shifted[static_cast<std::size_t>(std::countr_zero(t)) * width], width);
            offer();
        }
    });

    Best result;
    for (auto& b : best) {
        if (b.weight == kNone) continue;
        if (b.weight < result.weight || (b.weight == result.weight && detail::coeff_string_less(b.e.data(), result.e.data(), width)))
            result = b;
    }

    CosetResult out;
    out.min_weight = result.weight;
    out.witness.error_poly = Gf2Poly::from_words(result.e);
    out.witness.weight = result.weight;
    out.witness.achieved_lc = linear_complexity(S + out.witness.error_poly, period);
    return out;
}

StructuredResult klc_structured(const BinarySequence& seq, const SearchConfig& config) {
    const std::size_t period = seq.period();
    const auto structure = irreducible_structure(period);
    if (!structure)
        throw InvalidArgument("klc_structured needs period p^r with 2 primitive mod p^2; got period " + std::to_string(period));

    const Gf2Poly S = Gf2Poly::from_bits(seq.bits());
    const std::vector<Gf2Poly> factors = period_factors(structure->p, structure->r);
    const unsigned n_subsets = 1u << factors.size();

    StructuredResult result;
    std::vector<std::optional<ErrorWitness>> witnesses(n_subsets);
    for (unsigned subset = 0; subset < n_subsets; ++subset) {
        Gf2Poly d = Gf2Poly::one();
        for (std::size_t i = 0; i < factors.size(); ++i)
            if ((subset >> i) & 1u) d = d * factors[i];
        DivisorReport rep;
        rep.subset = subset;
        rep.degree = d.degree().value();
        rep.free_dim = period - rep.degree;
        if (subset == 0 || divides(d, S)) {
            // no correction needed; the empty error is the cheapest
            rep.min_weight = 0;
            witnesses[subset] = ErrorWitness{Gf2Poly{}, 0, linear_complexity(S, period)};
        } else if (rep.free_dim <= config.coset_dim_limit) {
            CosetResult c = min_weight_coset(S, d, period, config);
            rep.min_weight = c.min_weight;
            witnesses[subset] = std::move(c.witness);
        }
        result.divisors.push_back(rep);
    }

    // A divisor's cheapest error also makes each of its factors-subsets
    // divide, so computed sub-divisors give lower bounds for skipped ones.
    std::vector<std::size_t> lower_bound(n_subsets, 0);
    for (unsigned subset = 0; subset < n_subsets; ++subset) {
        if (result.divisors[subset].min_weight) continue;
        lower_bound[subset] = 1;  // d does not divide S
        for (unsigned sub = subset; sub != 0; sub = (sub - 1) & subset)
            if (const auto& mw = result.divisors[sub].min_weight) lower_bound[subset] = std::max(lower_bound[subset], *mw);
    }

    KlcProfile& profile = result.profile;
    profile.p = seq.provenance().p;
    profile.r = seq.provenance().r;
    profile.family = seq.provenance().family;
    profile.period = period;
    const std::size_t wt = weight(seq);
    for (std::size_t k = 0; k <= wt; ++k) {
        std::size_t best_lc = kNone;
        unsigned best_subset = 0;
        for (unsigned subset = 0; subset < n_subsets; ++subset) {
            const auto& rep = result.divisors[subset];
            if (!rep.min_weight || *rep.min_weight > k) continue;
            const std::size_t lc = period - rep.degree;
            if (lc < best_lc || (lc == best_lc && witness_less(*witnesses[subset], *witnesses[best_subset], period))) {
                best_lc = lc;
                best_subset = subset;
            }
        }
        std::size_t open_lo = best_lc;
        for (unsigned subset = 0; subset < n_subsets; ++subset) {
            const auto& rep = result.divisors[subset];
            if (rep.min_weight || lower_bound[subset] > k) continue;
            open_lo = std::min(open_lo, period - rep.degree);
        }
        KlcEntry entry;
        entry.k = k;
        entry.method = Method::coset;
        if (open_lo < best_lc) {
            entry.value = Interval{open_lo, best_lc};
            entry.method = Method::bound;
        } else {
            entry.value = Exact{best_lc};
            entry.witness = witnesses[best_subset];
        }
        profile.entries.push_back(std::move(entry));
    }
    return result;
}

ErrorWitness construct_optimal_error(std::uint64_t p, unsigned r) {
    if (r < 3) throw InvalidArgument("construct_optimal_error needs r >= 3");
    const CyclotomicPartition part = build_partition(p, r);
    const std::uint64_t q = checked_pow(p, r - 2);
    std::vector<std::size_t> exps;
    auto add_class = [&](std::uint64_t l) {
        for (std::uint64_t u : part[l]) exps.push_back(u);
    };
    for (std::uint64_t i = (p + 1) / 2; i <= p - 1; ++i)
        for (std::uint64_t j = 0; j <= (q - 1) / 2; ++j) add_class(i * q + j);
    for (std::uint64_t i = 0; i <= (p - 3) / 2; ++i)
        for (std::uint64_t j = (q + 1) / 2; j <= q - 1; ++j) add_class(i * q + j);

    ErrorWitness w;
    w.error_poly = Gf2Poly::from_exponents(exps);
    w.weight = w.error_poly.weight();
    const BinarySequence s = gen_euler_classes(p, r);
    w.achieved_lc = linear_complexity(Gf2Poly::from_bits(s.bits()) + w.error_poly, s.period());
    return w;
}

}  // namespace eqlc
