#pragma once

#include <string>
#include <vector>

#include "lfsm/machine.hpp"

namespace lfsm {

// Square matrix over the ring of rational power series, kept normalized
// per row: Q_i = lcm of the row-i denominators, entries R_{i,j}/Q_i.
class RationalMatrix {
public:
    explicit RationalMatrix(int n);

    int dim() const { return n_; }
    void set(int i, int j, RationalSeries r);
    const RationalSeries& at(int i, int j) const { return entries_[idx(i, j)]; }
    bool is_zero(int i, int j) const { return entries_[idx(i, j)].is_zero(); }

    const Gf2Poly& row_den(int i) const { return row_den_[i]; }  // Q_i
    const Gf2Poly& num(int i, int j) const { return nums_[idx(i, j)]; }  // R_{i,j}
    // Carry-domain bound for row i: max_j deg R_{i,j} (0 for an all-zero row).
    int carry_bound(int i) const;
    Gf2Poly g() const;  // product of the Q_i

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    void normalize_row(int i);
    int n_;
    std::vector<RationalSeries> entries_;
    std::vector<Gf2Poly> nums_;
    std::vector<Gf2Poly> row_den_;
};

// Autonomous rational machine: binary cells m plus per-row carry
// fractions c_i = carry_num_i / Q_i.
struct Rlfsm {
    RationalMatrix A;
    BitMatrix C;  // extraction, l x n
    BitVec m;
    std::vector<Gf2Poly> carry_num;  // numerator of c_i over Q_i

    explicit Rlfsm(RationalMatrix a);  // C = identity, zero state
    int n() const { return A.dim(); }
    // deg carry_num_i < max_j deg R_{i,j} for every row.
    bool carry_in_domain() const;
    void validate() const;
};

// Output v = C m from the state before the update, then
// mu_i = sum_j m_j A_{i,j} + c_i; m_i <- mu_i mod X; c_i <- mu_i div X.
BitVec rlfsm_step(Rlfsm& machine);
// Row i of the result is the m_i stream over `steps` clocks.
std::vector<BitSequence> rlfsm_simulate(Rlfsm machine, int steps);

// Entry (i, j) of (I - XA)^-1 as a reduced rational series, via the
// cofactors of the row-cleared matrix.
RationalSeries i_minus_xa_inverse_entry(const RationalMatrix& a, int i, int j);

struct RationalConnection {
    RationalSeries det;  // det(I - XA), reduced
    Gf2Poly t;           // T(X) = det(G(X)(I - XA)) = G^(n-1) det(cleared matrix)
};
RationalConnection rational_connection(const RationalMatrix& a);

// Cyclic cascade of v vanes; row j holds (alpha/beta) X^(i_j) in column
// (j+1) mod v.
struct WindmillSpec {
    Gf2Poly alpha;
    Gf2Poly beta;            // beta(0) = 1
    std::vector<int> shifts; // i_0 .. i_{v-1}, each >= 0
    int vanes() const { return static_cast<int>(shifts.size()); }
};
Rlfsm build_windmill(const WindmillSpec& spec);
RationalMatrix windmill_matrix(const WindmillSpec& spec);

struct InterleaveResult {
    std::vector<int> sigma;  // witnessing permutation when ok
    bool ok = false;
};
// Search permutations sigma (v <= 8) such that the interleaved sequence
// s_{vt+sigma(i)} = m_i(t) has min_poly dividing Q(X^v), Q the reduced
// connection numerator.
InterleaveResult windmill_interleave_check(const Rlfsm& machine, int horizon);

// Transfer of a 1-input/1-output LFSM: X * (C adj(I-XA) B) / Q, reduced.
// Independent of the internal state; always divisible by X.
RationalSeries transfer_function(const Lfsm& machine);
// Unit-weight B/C variant; (i0, j0) must match the positions in B and C.
RationalSeries vane_transfer(const Lfsm& machine, int i0, int j0);

// Galois vane realizing the transfer r (r.num(0) = 0 required): d =
// max(deg num, deg den) cells, A in Galois form from den, B from num,
// C = (1,0,...,0).
Lfsm compile_vane(const RationalSeries& r);

enum class ExpandStrategy { per_coefficient, per_row };

struct Expansion {
    Lfsm machine;  // autonomous; C has one row per RLFSM output
    int cells = 0;
    // Node row-vectors over the expanded cells: node i reproduces m_i.
    BitMatrix nodes;
};

Expansion expand_rlfsm(const Rlfsm& machine, ExpandStrategy strategy);
// One component circuit per nonzero entry of A, column-major order; each
// must be 1-in/1-out and realize the transfer X * A_{i,j}.
Expansion expand_block(const Rlfsm& machine, const std::vector<Lfsm>& components);

std::string rlfsm_to_json(const Rlfsm& machine, bool pretty = false);
Rlfsm rlfsm_from_json(const std::string& json_text);
WindmillSpec windmill_from_json(const std::string& json_text);
std::string windmill_to_json(const WindmillSpec& spec, bool pretty = false);

}  // namespace lfsm
