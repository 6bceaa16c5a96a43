#include "lfsm/search.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <utility>
#include <vector>

namespace lfsm {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t Rng::next() { return mix64(seed_ + ++counter_ * kGamma); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Lemire's unbiased bounded sampling.
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    std::uint64_t l = static_cast<std::uint64_t>(m);
    if (l < bound) {
        std::uint64_t t = -bound % bound;
        while (l < t) {
            x = next();
            m = static_cast<unsigned __int128>(x) * bound;
            l = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

Rng Rng::split(std::uint64_t i) const { return Rng(mix64(seed_ ^ mix64(i + kGamma))); }

namespace {

void validate_common(const GenConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("n must be >= 2");
    if (cfg.f < 0) throw std::invalid_argument("feedback count must be >= 0");
    if (cfg.max_trials < 1) throw std::invalid_argument("max_trials must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (!cfg.factors->has(cfg.n) && !cfg.allow_irreducible)
        throw std::invalid_argument(
            "no factorization available for this degree; "
            "supply one or allow irreducible-only acceptance");
}

// Constant-time necessary conditions for a candidate connection polynomial:
// degree n, q(0) = 1 and q(1) = 1 (odd weight; an even-weight q is divisible
// by x+1). Only candidates passing this screen proceed to the expensive
// primitivity test and count toward `trials`.
bool screen(const Gf2Poly& q, const GenConfig& cfg) {
    return q.degree() == cfg.n && q.constant_term() && q.weight() % 2 == 1;
}

// Full acceptance of a screened candidate; verdict is primitive, or
// irreducible_unknown_order in irreducible-only mode.
bool accept(const Gf2Poly& q, const GenConfig& cfg, Primitivity& verdict) {
    if (cfg.factors->has(cfg.n)) {
        verdict = is_primitive(q, *cfg.factors);
        return verdict == Primitivity::primitive;
    }
    if (!is_irreducible(q)) return false;
    verdict = Primitivity::irreducible_unknown_order;
    return true;
}

// Random ring skeleton plus f feedbacks, each placed only where both the
// row and the column still have weight 1. Fails (nullopt) if no valid
// position is found within the attempt cap.
std::optional<RingSpec> random_ring(Rng& rng, int n, int f) {
    BitMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.set(i, (i + 1) % n, true);
    RingSpec spec;
    spec.n = n;
    int placed = 0;
    long long cap = 400LL * n + 1000;
    while (placed < f) {
        if (--cap < 0) return std::nullopt;
        int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n));
        if (a.get(i, j)) continue;  // no-op placement
        if (a.row_weight(i) != 1 || a.col_weight(j) != 1) continue;
        a.set(i, j, true);
        spec.feedbacks.emplace_back(i, j);
        ++placed;
    }
    return spec;
}

GenResult finish_hw(RingSpec spec, Gf2Poly q, Primitivity verdict) {
    GenResult result;
    result.automaton = build_ring(spec);
    result.ring = std::move(spec);
    result.connection = std::move(q);
    result.primitivity = verdict;
    result.metrics = hardware_metrics(result.automaton.A);
    result.diffusion = diffusion_delay(result.automaton.A);
    return result;
}

// Generic lockstep multi-worker driver. `trial` runs one candidate round on
// a worker's stream and returns a result on success; `cand` reports how many
// candidate automata the round constructed (bounded by max_trials) and
// `tested` how many of them passed the screen into a primitivity test.
template <typename Trial>
GenResult run_search(const GenConfig& cfg, Trial trial) {
    std::vector<Rng> streams;
    Rng root(cfg.seed);
    for (int w = 0; w < cfg.workers; ++w)
        streams.push_back(cfg.workers == 1 ? root : root.split(w));
    long long total_cand = 0, total_tested = 0;
    while (total_cand < cfg.max_trials) {
        std::vector<std::optional<GenResult>> hits(cfg.workers);
        std::vector<long long> cand(cfg.workers, 0), tested(cfg.workers, 0);
        if (cfg.workers == 1) {
            hits[0] = trial(streams[0], cfg.max_trials - total_cand, cand[0], tested[0]);
        } else {
            std::vector<std::future<void>> jobs;
            for (int w = 0; w < cfg.workers; ++w)
                jobs.push_back(std::async(std::launch::async, [&, w] {
                    hits[w] = trial(streams[w], cfg.max_trials - total_cand,
                                    cand[w], tested[w]);
                }));
            for (auto& j : jobs) j.get();
        }
        for (int w = 0; w < cfg.workers; ++w) {
            total_cand += cand[w];
            total_tested += tested[w];
        }
        for (int w = 0; w < cfg.workers; ++w)
            if (hits[w]) {
                hits[w]->candidates = total_cand;
                hits[w]->trials = total_tested;
                return std::move(*hits[w]);
            }
    }
    throw MaxTrialsError(total_cand, total_tested);
}

}  // namespace

GenResult gen_hw_naive(const GenConfig& cfg) {
    validate_common(cfg);
    if (cfg.f > cfg.n) throw std::invalid_argument("feedback count must be <= n");
    return run_search(cfg, [&cfg](Rng& rng, long long, long long& cand,
                                  long long& tested) -> std::optional<GenResult> {
        cand = 1;
        auto spec = random_ring(rng, cfg.n, cfg.f);
        if (!spec) return std::nullopt;
        Gf2Poly q = connection_polynomial(build_ring(*spec).A);
        if (!screen(q, cfg)) return std::nullopt;
        tested = 1;
        Primitivity verdict;
        if (!accept(q, cfg, verdict)) return std::nullopt;
        return finish_hw(std::move(*spec), std::move(q), verdict);
    });
}

GenResult gen_hw_cofactor(const GenConfig& cfg) {
    validate_common(cfg);
    if (cfg.f < 1) throw std::invalid_argument("cofactor search needs f >= 1");
    if (cfg.f > cfg.n) throw std::invalid_argument("feedback count must be <= n");
    return run_search(cfg, [&cfg](Rng& rng, long long budget, long long& cand,
                                  long long& tested) -> std::optional<GenResult> {
        auto spec = random_ring(rng, cfg.n, cfg.f - 1);
        if (!spec) {
            cand = 1;
            return std::nullopt;
        }
        BitMatrix a = build_ring(*spec).A;
        Gf2Poly q0 = connection_polynomial(a);
        PolyMatrix adj = adjunct_ixa(a);
        // All still-valid last positions, scanned in random order.
        std::vector<std::pair<int, int>> candidates;
        for (int i = 0; i < cfg.n; ++i) {
            if (a.row_weight(i) != 1) continue;
            for (int j = 0; j < cfg.n; ++j)
                if (!a.get(i, j) && a.col_weight(j) == 1) candidates.emplace_back(i, j);
        }
        for (std::size_t t = candidates.size(); t > 1; --t)
            std::swap(candidates[t - 1], candidates[rng.below(t)]);
        for (auto [i, j] : candidates) {
            if (++cand > budget) return std::nullopt;
            // det after placing (i,j) = Q0 + X * cof_{i,j}(I - XA).
            Gf2Poly q = q0 + adj.at(j, i).shifted(1);
            if (!screen(q, cfg)) continue;
            ++tested;
            Primitivity verdict;
            if (!accept(q, cfg, verdict)) continue;
            spec->feedbacks.emplace_back(i, j);
            return finish_hw(std::move(*spec), std::move(q), verdict);
        }
        if (cand == 0) cand = 1;
        return std::nullopt;
    });
}

GenResult gen_word(const GenConfig& cfg) {
    validate_common(cfg);
    if (cfg.k < 2 || cfg.n % cfg.k != 0)
        throw std::invalid_argument("word size must be >= 2 and divide n");
    int words = cfg.n / cfg.k;
    if (cfg.f > words * words * (cfg.k - 1))
        throw std::invalid_argument("too many feedbacks for the word grid");
    return run_search(cfg, [&cfg, words](Rng& rng, long long, long long& cand,
                                         long long& tested) -> std::optional<GenResult> {
        cand = 1;
        using Op = WordBlockSpec::Op;
        WordBlockSpec spec;
        spec.n = cfg.n;
        spec.k = cfg.k;
        for (int i = 0; i < words; ++i) spec.blocks.push_back({i, (i + 1) % words, Op::I, 0});
        auto duplicate = [&spec](const WordBlockSpec::Block& nb) {
            // An identical block would cancel itself; anything else may
            // share a cell (the shift matrices simply add).
            for (const auto& b : spec.blocks)
                if (b.row == nb.row && b.col == nb.col && b.op == nb.op &&
                    b.shift == nb.shift)
                    return true;
            return false;
        };
        long long cap = 400LL * words + 1000;
        for (int placed = 0; placed < cfg.f;) {
            if (--cap < 0) return std::nullopt;
            int r = static_cast<int>(rng.below(words));
            int c = static_cast<int>(rng.below(words));
            // Shift in [-k/2, k/2] \ {0}; negative = right shift.
            int s = 1 + static_cast<int>(rng.below(cfg.k / 2));
            Op op = rng.below(2) ? Op::L : Op::R;
            WordBlockSpec::Block nb{r, c, op, s};
            if (duplicate(nb)) continue;
            spec.blocks.push_back(nb);
            ++placed;
        }
        Lfsm machine = build_word(spec);
        Gf2Poly q = connection_polynomial(machine.A);
        if (!screen(q, cfg)) return std::nullopt;
        tested = 1;
        Primitivity verdict;
        if (!accept(q, cfg, verdict)) return std::nullopt;
        GenResult result;
        result.automaton = std::move(machine);
        result.word = std::move(spec);
        result.connection = std::move(q);
        result.primitivity = verdict;
        result.metrics = hardware_metrics(result.automaton.A);
        result.diffusion = diffusion_delay(result.automaton.A);
        return result;
    });
}

mpq_class expected_trials(int n, const FactorTable& factors) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    mpz_class num = (mpz_class(1) << (n - 2)) * n;
    mpq_class r(num, phi_two_pow_minus_one(n, factors));
    r.canonicalize();
    return r;
}

}  // namespace lfsm
