#pragma once

#include <string>
#include <vector>

#include "lfsm/matrix.hpp"

namespace lfsm {

// Linear finite state machine: m <- Am + Bu, v = Cm. k = 0 (B with zero
// columns) encodes an autonomous machine.
struct Lfsm {
    BitMatrix A;   // n x n
    BitMatrix B;   // n x k
    BitMatrix C;   // l x n
    BitVec state;  // length n

    int n() const { return A.rows(); }
    int k() const { return B.cols(); }
    int l() const { return C.rows(); }

    static Lfsm autonomous(BitMatrix a, BitMatrix c, BitVec initial);
    void validate() const;  // throws on dimension inconsistency
};

// Output v = C m from the state BEFORE the update, then m <- Am + Bu.
BitVec lfsm_step(Lfsm& machine, const BitVec& u = BitVec());

// Collected per-cell bit streams: row i of the result is cell i over
// `steps` clocks (state before each update).
std::vector<BitSequence> simulate_cells(Lfsm machine, int steps);
// Output streams, one BitSequence per output line.
std::vector<BitSequence> simulate_outputs(Lfsm machine, int steps,
                                          const std::vector<BitVec>& inputs = {});

// Cells n-1..1, a space, then cell 0 (e.g. "1011010 0").
std::string state_display(const BitVec& m);

struct CellSeries {
    std::vector<RationalSeries> cells;    // generating function of each cell
    std::vector<RationalSeries> outputs;  // C applied to the cells
};

// M = adj(I-XA)/Q * (m + X B U), V = C M; `input` gives one finite
// polynomial per input line (empty means zero input).
CellSeries cell_series(const Lfsm& machine, const std::vector<Gf2Poly>& input = {});

// Similar machine A' = P^-1 A P, B' = P^-1 B, C' = C P, m' = P^-1 m.
Lfsm similarity(const Lfsm& machine, const BitMatrix& p);

// With p^(t) = adj(I-XA) m^(t), verify X p^(t+1) = p^(t) mod Q
// componentwise over `steps` clocks. Autonomous machines only.
bool p_sequence_check(const Lfsm& machine, int steps);

// Canonical automaton JSON (sparse 0-based coordinates, hex state).
std::string lfsm_to_json(const Lfsm& machine, bool pretty = false);
Lfsm lfsm_from_json(const std::string& json_text);

}  // namespace lfsm
