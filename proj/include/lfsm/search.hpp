#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "lfsm/analysis.hpp"
#include "lfsm/factors.hpp"
#include "lfsm/families.hpp"

namespace lfsm {

// Counter-based splitmix64 stream: output i is the splitmix64 finalizer
// applied to seed + (i+1) * golden gamma. Streams for parallel workers are
// derived with split().
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next();
    // Uniform value in [0, bound), bound >= 1; unbiased via 128-bit scaling
    // plus rejection of the short tail.
    std::uint64_t below(std::uint64_t bound);
    // Independent stream index `i` derived from this seed.
    Rng split(std::uint64_t i) const;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

struct GenConfig {
    int n = 0;
    int f = 0;                 // feedbacks to place
    int k = 0;                 // word size, gen_word only (k | n)
    std::uint64_t seed = 0;
    long long max_trials = 1'000'000;
    const FactorTable* factors = &FactorTable::builtin();
    // Accept irreducible connection polynomials when the factorization of
    // 2^n - 1 is unavailable (the result carries the degraded verdict).
    bool allow_irreducible = false;
    int workers = 1;
};

struct GenResult {
    Lfsm automaton;
    Gf2Poly connection;
    // Candidate automata constructed across all workers, and how many of
    // them reached a full primitivity test. A candidate is tested only when
    // its connection polynomial has degree n, q(0) = 1 and q(1) = 1 (the
    // two constant-time necessary conditions); `trials` is therefore the
    // count comparable with expected_trials().
    long long candidates = 0;
    long long trials = 0;
    Primitivity primitivity = Primitivity::reducible;
    HardwareMetrics metrics;
    DiffusionReport diffusion;
    RingSpec ring;              // gen_hw_* only
    WordBlockSpec word;         // gen_word only
};

// Raised when max_trials candidate automata were examined without success.
class MaxTrialsError : public std::runtime_error {
public:
    MaxTrialsError(long long candidates, long long trials)
        : std::runtime_error("max trials exceeded"),
          candidates(candidates), trials(trials) {}
    long long candidates;
    long long trials;
};

// Ring LFSR search, full determinant recomputation per candidate: place f
// feedbacks at positions with row and column weight 1, accept when the
// connection polynomial is primitive.
GenResult gen_hw_naive(const GenConfig& cfg);

// Ring LFSR search via cofactors: place f-1 feedbacks, then scan last
// positions (i,j) testing Q0 + X * cof_{i,j}(I - XA) for primitivity.
GenResult gen_hw_cofactor(const GenConfig& cfg);

// Word LFSR search: cyclic word skeleton plus f random shift blocks with
// shifts in [-k/2, k/2] \ {0} (negative = right shift).
GenResult gen_word(const GenConfig& cfg);

// Expected number of trials until a random candidate polynomial of degree n
// is primitive: 2^(n-2) / (phi(2^n - 1) / n), exact.
mpq_class expected_trials(int n, const FactorTable& factors);

}  // namespace lfsm
