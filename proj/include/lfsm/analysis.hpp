#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lfsm/machine.hpp"

namespace lfsm {

// Influence-graph diameter of a transition matrix: edge j -> i iff
// A_{i,j} != 0 (cell j feeds cell i in one clock).
struct DiffusionReport {
    std::optional<int> delay;        // empty when not strongly connected
    std::vector<int> eccentricities; // per-source max shortest path; -1 if cut off
    bool strongly_connected = false;
    std::pair<int, int> unreachable_pair{-1, -1}; // witness when not strongly connected
};

DiffusionReport diffusion_delay(const BitMatrix& a);

// Exact statistics over one period of a binary sequence. The period is the
// declared one, or else the smallest p with s[i] = s[i mod p] for all i.
struct SequenceStats {
    int period = 0;
    long long ones = 0, zeros = 0;
    // run_histogram[symbol][length] = number of (cyclic) runs of that symbol.
    std::map<int, long long> run_histogram[2];
    // autocorrelation[tau] = sum_i (-1)^(s_{i+tau} + s_i), cyclic; filled
    // only when period <= kAutocorrLimit (it is quadratic work).
    std::vector<long long> autocorrelation;
    static constexpr int kAutocorrLimit = 4096;
};

SequenceStats sequence_stats(const BitSequence& s,
                             std::optional<int> declared_period = std::nullopt);

// C_{a,b}(tau) = sum_{i=0}^{N-1} (-1)^(a_{i+tau} + b_i), N = lcm of the two
// periods, indices cyclic.
long long cross_correlation(const BitSequence& a, int period_a,
                            const BitSequence& b, int period_b, long long tau);

// (agreements - disagreements) / n for two equal-length sequences.
mpq_class correlation(const BitSequence& a, const BitSequence& b);

// Agreement fraction between the trajectories of an initialization and its
// single-bit flip, for t = 0..horizon. By linearity the state difference is
// A^t e_bit, so entry t is 1 - 2 w_H(A^t e_bit) / n.
std::vector<mpq_class> avalanche_correlation(const Lfsm& machine, int bit, int horizon);

}  // namespace lfsm
