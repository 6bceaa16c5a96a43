// Acceptance suite: one pass/fail line per criterion. Clauses of a
// criterion that record fixture values the implementation disproves live in
// the known_discrepancies binary instead; see its output and the README.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfsm/analysis.hpp"
#include "lfsm/families.hpp"
#include "lfsm/rational.hpp"
#include "lfsm/search.hpp"

using namespace lfsm;

namespace {

int g_criterion_failures = 0;

#define REQ(cond)                                                           \
    do {                                                                    \
        if (!(cond)) {                                                      \
            ++g_criterion_failures;                                         \
            std::cerr << "    failed at " << __FILE__ << ":" << __LINE__    \
                      << ": " << #cond << "\n";                             \
        }                                                                   \
    } while (0)

Gf2Poly P(const std::string& s) { return Gf2Poly::parse(s); }
const Gf2Poly kQ8 = P("x^8+x^6+x^5+x^3+1");
const Gf2Poly kQ24 = P("x^24+x^21+x^16+x^9+x^7+x^3+1");

RationalMatrix l1_matrix() {
    RationalMatrix a(2);
    a.set(0, 0, RationalSeries(P("x^2"), P("x^3+1")));
    a.set(0, 1, RationalSeries(P("x"), P("x^2+x+1")));
    a.set(1, 0, RationalSeries::from_poly(Gf2Poly::one()));
    return a;
}

RationalMatrix l2_matrix() {
    RationalMatrix a(3);
    a.set(0, 0, RationalSeries(P("x+1"), P("x^3+x+1")));
    a.set(0, 1, RationalSeries(P("x"), P("x^2+x+1")));
    a.set(1, 0, RationalSeries::from_poly(P("x^3+x^2")));
    a.set(1, 1, RationalSeries::from_poly(P("x^2")));
    a.set(1, 2, RationalSeries::from_poly(Gf2Poly::one()));
    a.set(2, 1, RationalSeries(P("x+1"), P("x^2+x+1")));
    return a;
}

// Four-node filtered-register machine: carries feed forward through a
// degree-12 Galois register observed at cells 0, 5, 7, 9.
RationalMatrix filtered_matrix() {
    auto S = [](const char* s) { return RationalSeries(Gf2Poly::parse(s), Gf2Poly::one()); };
    RationalMatrix a(4);
    a.set(0, 0, S("x^4"));
    a.set(0, 1, S("x^4"));
    a.set(1, 0, S("x+1"));
    a.set(1, 2, S("x"));
    a.set(2, 0, S("x"));
    a.set(2, 3, S("x"));
    a.set(3, 0, S("x^2+x"));
    return a;
}

WindmillSpec windmill4_spec() {
    return {P("x^5+x^3+x^2+1"), Gf2Poly::one(), {1, 0, 0, 0}};
}

bool criterion_table1() {
    const char* l0[] = {"0000000 1", "1011010 0", "0101101 0", "0010110 1", "1010001 0",
                        "0101000 1", "1001110 0", "0100111 0", "0010011 1"};
    const char* l1[] = {"0000000 1", "1000000 0", "0100000 0", "0010000 0", "1001000 0",
                        "0100100 0", "1010010 0", "0101001 0", "0010100 1"};
    const char* l2[] = {"0000000 1", "1000000 0", "0100100 0", "0010010 0", "1001001 0",
                        "0100000 1", "1010000 0", "0101100 0", "0010110 0"};
    Lfsm m0 = build_classic(ClassicKind::galois, kQ8);
    Lfsm m1 = build_classic(ClassicKind::fibonacci, kQ8);
    Lfsm m2 = ring_t2();
    for (Lfsm* m : {&m0, &m1, &m2}) m->state = BitVec::from_hex("0x01", 8);
    for (int t = 0; t <= 8; ++t) {
        REQ(state_display(m0.state) == l0[t]);
        REQ(state_display(m1.state) == l1[t]);
        REQ(state_display(m2.state) == l2[t]);
        lfsm_step(m0);
        lfsm_step(m1);
        lfsm_step(m2);
    }
    return true;
}

bool criterion_table2() {
    Rlfsm wm = build_windmill(windmill4_spec());
    REQ(rational_connection(wm.A).det.num() == P("x^25+x^17+x^13+x^5+1"));
    struct Row {
        int m[4];
        const char* c[4];
    };
    const std::vector<Row> table = {
        {{1, 0, 0, 0}, {"0", "0", "0", "0"}},
        {{0, 0, 0, 1}, {"0", "0", "0", "x^4+x^2+x"}},
        {{0, 0, 1, 0}, {"0", "0", "x^4+x^2+x", "x^3+x+1"}},
        {{0, 1, 0, 1}, {"0", "x^4+x^2+x", "x^3+x+1", "x^2+1"}},
        {{0, 0, 0, 1}, {"x^5+x^3+x^2+1", "x^3+x+1", "x^4+x+1", "x"}},
        {{1, 1, 0, 0}, {"x^4+x^2+x", "x^2+1", "x^4+x^3+x^2+x+1", "1"}},
        {{0, 1, 1, 0}, {"x^5+x^2+x", "x", "x^3+x^2+x+1", "x^4+x^2+x"}},
        {{0, 1, 1, 0}, {"x^5+x^4+x^3+x^2+x", "x^4+x^2+x+1", "x^2+x+1", "x^3+x+1"}},
        {{0, 0, 1, 1}, {"x^5+x^4+x", "x^4+x^3+x^2+1", "x+1", "x^2+1"}},
    };
    Rlfsm sim = wm;
    sim.m.set(0, true);
    for (const Row& row : table) {
        for (int i = 0; i < 4; ++i) {
            REQ((int)sim.m.get(i) == row.m[i]);
            Gf2Poly want =
                std::string(row.c[i]) == "0" ? Gf2Poly::zero() : P(row.c[i]);
            REQ(sim.carry_num[i] == want);
        }
        rlfsm_step(sim);
    }
    return true;
}

bool criterion_adjugate() {
    PolyMatrix adj = adjunct_ixa(ring_t2().A);
    REQ(adj.at(0, 0) == P("x^6+x^3+1"));
    REQ(adj.at(3, 2) == P("x^7+x^5+x^4+x^2"));
    return true;
}

bool criterion_filtered() {
    RationalMatrix a = filtered_matrix();
    const Gf2Poly q = P("x^12+x^11+x^9+x^7+x^6+x^5+1");
    REQ(rational_connection(a).det.num() == q);

    // numerators of (I - XA)^-1 over the common denominator q; the two rows
    // marked * differ from the published fixture (see known_discrepancies)
    const char* want[4][4] = {
        {"1", "x^5", "x^7", "x^9"},
        {"x^7+x^6+x^4+x^2+x", "x^5+1", "x^7+x^2" /* * */, "x^9+x^4" /* * */},
        {"x^5+x^4+x^2", "x^10+x^9+x^7", "x^7+x^6+x^5+1", "x^9+x^8+x^7+x^2"},
        {"x^3+x^2", "x^8+x^7", "x^10+x^9", "x^9+x^7+x^6+x^5+1"},
    };
    RationalSeries B[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            B[i][j] = i_minus_xa_inverse_entry(a, i, j);
            REQ(B[i][j].num() * (q / B[i][j].den()) == P(want[i][j]));
        }

    // output series from a symbolic initial state: node i generates
    // sum_j P_{i,j} (m_j(0) + X c_j(0)) / q; checked against direct
    // simulation of the underlying degree-12 Galois register, and against
    // the rational machine itself
    Lfsm g = build_classic(ClassicKind::galois, q);
    const int tap[4] = {0, 5, 7, 9};
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        BitVec init(12);
        for (int b = 0; b < 12; ++b) init.set(b, rng.below(2));
        Lfsm m = g;
        m.state = init;
        std::vector<BitSequence> cell(4);
        for (int clk = 0; clk < 48; ++clk) {
            for (int s = 0; s < 4; ++s) cell[s].push_back(m.state.get(tap[s]));
            lfsm_step(m);
        }
        // initial carries: the register cells strictly between taps
        Gf2Poly c0[4];
        for (int b = 1; b <= 4; ++b)
            if (init.get(b)) c0[0] = c0[0] + Gf2Poly::one().shifted(b - 1);
        if (init.get(6)) c0[1] = Gf2Poly::one();
        if (init.get(8)) c0[2] = Gf2Poly::one();
        if (init.get(10)) c0[3] = c0[3] + Gf2Poly::one();
        if (init.get(11)) c0[3] = c0[3] + Gf2Poly::one().shifted(1);

        for (int i = 0; i < 4; ++i) {
            Gf2Poly num;
            for (int j = 0; j < 4; ++j) {
                Gf2Poly w = c0[j].shifted(1);
                if (init.get(tap[j])) w = w + Gf2Poly::one();
                num = num + B[i][j].num() * (q / B[i][j].den()) * w;
            }
            REQ(series_expand(num, q, 48) == cell[i]);
        }

        Rlfsm rm(a);
        for (int j = 0; j < 4; ++j) rm.m.set(j, init.get(tap[j]));
        rm.carry_num = {c0[0], c0[1], c0[2], c0[3]};
        std::vector<BitSequence> sim = rlfsm_simulate(rm, 48);
        for (int i = 0; i < 4; ++i) REQ(sim[i] == cell[i]);
    }
    return true;
}

bool criterion_l1() {
    RationalMatrix l1 = l1_matrix();
    REQ(i_minus_xa_inverse_entry(l1, 0, 0) == RationalSeries(P("x^3+1"), P("x^4+x^3+1")));
    REQ(i_minus_xa_inverse_entry(l1, 0, 1) == RationalSeries(P("x^3+x^2"), P("x^4+x^3+1")));
    REQ(i_minus_xa_inverse_entry(l1, 1, 0) == RationalSeries(P("x^4+x"), P("x^4+x^3+1")));
    REQ(i_minus_xa_inverse_entry(l1, 1, 1) ==
        RationalSeries(Gf2Poly::one(), P("x^4+x^3+1")));
    Rlfsm m(l1);
    Expansion ec = expand_rlfsm(m, ExpandStrategy::per_coefficient);
    REQ(ec.cells == 6);
    REQ(connection_polynomial(ec.machine.A) == P("x^6+x^3+x^2+x+1"));
    // the primitivity claim for this determinant is a known discrepancy
    Expansion er = expand_rlfsm(m, ExpandStrategy::per_row);
    REQ(er.cells == 4);
    REQ(connection_polynomial(er.machine.A) == P("x^4+x^3+1"));
    return true;
}

bool criterion_l2() {
    Rlfsm m(l2_matrix());
    REQ(rational_connection(m.A).det.num().degree() == 9);
    Expansion ec = expand_rlfsm(m, ExpandStrategy::per_coefficient);
    REQ(ec.cells == 15);
    REQ(connection_polynomial(ec.machine.A).degree() == 11);
    Expansion er = expand_rlfsm(m, ExpandStrategy::per_row);
    REQ(er.cells == 11);
    REQ(connection_polynomial(er.machine.A) ==
        P("x+1") * P("x^2+x+1") * P("x^8+x^7+x^5+x^4+x^3+x^2+1"));
    return true;
}

bool criterion_three_vane() {
    Lfsm t2 = ring_t2();
    RationalSeries a1(P("x^6+x^3+1"), kQ8);
    RationalSeries a3(P("x^7+x^5+x^4+x^2"), kQ8);
    RationalMatrix tv(3);
    tv.set(0, 1, a1);
    tv.set(1, 2, a1);
    tv.set(2, 0, a3);
    REQ(rational_connection(tv).det.num() == kQ24);
    REQ(is_primitive(kQ24, FactorTable::builtin()) == Primitivity::primitive);

    Rlfsm tvm(tv);
    Expansion tg = expand_rlfsm(tvm, ExpandStrategy::per_coefficient);
    REQ(tg.cells == 24);
    REQ(connection_polynomial(tg.machine.A) == kQ24);
    REQ(hardware_metrics(tg.machine.A).cost == 19);

    Lfsm ring1 = t2, ring3 = t2;
    ring1.B = BitMatrix(8, 1);
    ring1.B.set(0, 0, true);
    ring1.C = BitMatrix(1, 8);
    ring1.C.set(0, 0, true);
    ring3.B = BitMatrix(8, 1);
    ring3.B.set(2, 0, true);
    ring3.C = BitMatrix(1, 8);
    ring3.C.set(0, 3, true);
    Expansion tr = expand_block(tvm, {ring3, ring1, ring1});
    REQ(tr.cells == 24);
    REQ(connection_polynomial(tr.machine.A) == kQ24);
    REQ(hardware_metrics(tr.machine.A).cost == 9);
    return true;
}

bool criterion_ring128() {
    Lfsm ring = build_ring(appendix_ring128_spec());
    Gf2Poly q = connection_polynomial(ring.A);
    REQ(q.degree() == 128);
    REQ(q.weight() == 65);
    REQ(is_primitive(q, FactorTable::builtin()) == Primitivity::primitive);
    REQ(diffusion_delay(ring.A).delay == 27);
    HardwareMetrics m = hardware_metrics(ring.A);
    REQ(m.fan_out == 2);
    REQ(m.cost == 64);
    // the published critical-path value is a known discrepancy
    return true;
}

bool criterion_snow_word512() {
    Lfsm snow = build_snow2();
    REQ(diffusion_delay(snow.A).delay == 49);
    Gf2Poly qs = connection_polynomial(snow.A);
    REQ(qs.degree() == 512);
    REQ(is_irreducible(qs));  // degree 512 is unfactored: partial verdict
    Lfsm w = build_word(word512_spec());
    REQ(diffusion_delay(w.A).delay == 33);
    REQ(connection_polynomial(w.A).degree() == 512);
    // irreducibility of the word machine's connection polynomial is a known
    // discrepancy
    return true;
}

bool criterion_word40() {
    Lfsm w = build_word(word40_spec());
    Gf2Poly q = connection_polynomial(w.A);
    REQ(is_primitive(q, FactorTable::builtin()) == Primitivity::primitive);
    REQ(diffusion_delay(w.A).delay == 27);
    REQ(hardware_metrics(w.A).cost == 19);
    return true;
}

bool criterion_mseq() {
    BitSequence s = series_expand(Gf2Poly::one(), kQ8, 510);
    SequenceStats st = sequence_stats(s);
    REQ(st.period == 255);
    REQ(st.ones == 128);
    REQ(st.zeros == 127);
    for (int l = 1; l <= 6; ++l) {
        REQ(st.run_histogram[0][l] == (1 << (6 - l)));
        REQ(st.run_histogram[1][l] == (1 << (6 - l)));
    }
    REQ(st.run_histogram[0][7] == 1);
    REQ(st.run_histogram[1][8] == 1);
    REQ(st.autocorrelation[0] == 255);
    for (int tau = 1; tau < 255; ++tau) REQ(st.autocorrelation[tau] == -1);
    return true;
}

bool criterion_generator_stats() {
    const FactorTable& ft = FactorTable::builtin();
    for (int n : {8, 12, 16}) {
        GenConfig cfg;
        cfg.n = n;
        cfg.f = 3;
        long long sum = 0;
        const int seeds = 200;
        for (int s = 0; s < seeds; ++s) {
            cfg.seed = 1000 + static_cast<std::uint64_t>(s);
            GenResult r = gen_hw_naive(cfg);
            sum += r.trials;
            if (s < 10) {
                // full analyzer postconditions on accepted outputs
                REQ(r.primitivity == Primitivity::primitive);
                REQ(r.connection == connection_polynomial(r.automaton.A));
                REQ(r.connection.degree() == n);
                REQ(build_ring(r.ring).A == r.automaton.A);
                REQ(r.metrics.cost == 3);
                REQ(r.diffusion.strongly_connected);
                for (int i = 0; i < n; ++i) {
                    REQ(r.automaton.A.row_weight(i) <= 2);
                    REQ(r.automaton.A.col_weight(i) <= 2);
                }
            }
        }
        double mean = static_cast<double>(sum) / seeds;
        double expected = mpq_class(expected_trials(n, ft)).get_d();
        REQ(mean <= 2.0 * expected);
        REQ(mean >= 0.5 * expected);
    }
    return true;
}

bool criterion_oracles() {
    std::mt19937 rng(4242);

    // (a) series vs simulation, 200 random autonomous machines n <= 32
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 31);
        BitMatrix a(n, n);
        for (int i = 0; i < n; ++i) {
            a.set(i, (i + 1) % n, true);
            a.set(rng() % n, rng() % n, true);
        }
        BitVec init(n);
        for (int i = 0; i < n; ++i) init.set(i, rng() & 1);
        Lfsm m = Lfsm::autonomous(a, BitMatrix::identity(n), init);
        CellSeries cs = cell_series(m);
        auto sim = simulate_cells(m, 2 * n + 8);
        for (int i = 0; i < n; ++i) REQ(series_expand(cs.cells[i], 2 * n + 8) == sim[i]);
    }

    // (b) adj(I-XA)(I-XA) = Q I, 100 random n <= 8
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix a(n, n);
        for (int i = 0; i < 2 * n; ++i) a.set(rng() % n, rng() % n, true);
        PolyMatrix adj = adjunct_ixa(a);
        PolyMatrix ixa = PolyMatrix::i_minus_xa(a);
        Gf2Poly q = connection_polynomial(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Gf2Poly sum;
                for (int k = 0; k < n; ++k) sum = sum + adj.at(i, k) * ixa.at(k, j);
                REQ(sum == (i == j ? q : Gf2Poly::zero()));
            }
    }

    // (c) determinant rank-1 update vs recomputation, 100 random n <= 8
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        BitMatrix a(n, n);
        for (int i = 0; i < 2 * n; ++i) a.set(rng() % n, rng() % n, true);
        int i = rng() % n, j = rng() % n;
        if (a.get(i, j)) continue;
        BitMatrix a2 = a;
        a2.set(i, j, true);
        REQ(det_rank1_update(PolyMatrix::i_minus_xa(a), i, j, Gf2Poly::x()) ==
            connection_polynomial(a2));
    }

    // (d) similarity preserves outputs, 100 random n <= 16
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 15);
        BitMatrix a(n, n), p(n, n);
        for (int i = 0; i < 3 * n; ++i) a.set(rng() % n, rng() % n, true);
        do {
            p = BitMatrix(n, n);
            for (int i = 0; i < 3 * n; ++i) p.set(rng() % n, rng() % n, true);
        } while (!p.inverse());
        BitVec init(n);
        for (int i = 0; i < n; ++i) init.set(i, rng() & 1);
        Lfsm m = Lfsm::autonomous(a, BitMatrix::identity(n), init);
        Lfsm s = similarity(m, p);
        auto om = simulate_outputs(m, 2 * n);
        auto os = simulate_outputs(s, 2 * n);
        REQ(om == os);
    }

    // (e) p-sequence congruence, 100 random n <= 16
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 15);
        BitMatrix a(n, n);
        for (int i = 0; i < n; ++i) a.set(i, (i + 1) % n, true);
        for (int i = 0; i < 2; ++i) a.set(rng() % n, rng() % n, true);
        BitVec init(n);
        for (int i = 0; i < n; ++i) init.set(i, rng() & 1);
        Lfsm m = Lfsm::autonomous(a, BitMatrix::identity(n), init);
        REQ(p_sequence_check(m, 20));
    }

    // (f) carry-domain closure over 1000 steps, 100 random rational machines
    int built = 0;
    while (built < 100) {
        int n = 2 + static_cast<int>(rng() % 3);
        RationalMatrix a(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            // row denominator with Q_i(0) = 1
            Gf2Poly den = Gf2Poly::one();
            int dd = static_cast<int>(rng() % 3);
            for (int d = 1; d <= dd; ++d)
                if (rng() & 1) den.set_coeff(d, true);
            int placed = 0;
            for (int j = 0; j < n; ++j) {
                if (rng() % 2 && placed + 1 < n) continue;
                Gf2Poly num;
                for (int d = 0; d <= den.degree() + 1; ++d)
                    if (rng() & 1) num.set_coeff(d, true);
                if (num.is_zero()) num = Gf2Poly::one();
                a.set(i, j, RationalSeries(num, den));
                ++placed;
            }
            // side condition for closure: deg Q_i <= max_j deg R_{i,j}
            if (a.row_den(i).degree() > a.carry_bound(i)) ok = false;
        }
        if (!ok) continue;
        Rlfsm m(a);
        for (int i = 0; i < n; ++i) {
            m.m.set(i, rng() & 1);
            Gf2Poly c;
            for (int d = 0; d < a.carry_bound(i); ++d)
                if (rng() & 1) c.set_coeff(d, true);
            m.carry_num[i] = c;
        }
        REQ(m.carry_in_domain());
        for (int step = 0; step < 1000; ++step) rlfsm_step(m);
        REQ(m.carry_in_domain());
        ++built;
    }

    // (g) vane compile / transfer round trip, 200 random transfers
    int done = 0;
    while (done < 200) {
        Gf2Poly den = Gf2Poly::one();
        for (int d = 1; d <= 1 + static_cast<int>(rng() % 6); ++d)
            if (rng() & 1) den.set_coeff(d, true);
        Gf2Poly num;
        for (int d = 1; d <= 1 + static_cast<int>(rng() % 6); ++d)
            if (rng() & 1) num.set_coeff(d, true);
        if (num.is_zero()) num = Gf2Poly::x();
        RationalSeries r(num, den);
        if (r.is_zero()) continue;
        REQ(transfer_function(compile_vane(r)) == r);
        ++done;
    }
    return true;
}

bool criterion_interleave() {
    Rlfsm wm = build_windmill(windmill4_spec());
    wm.m.set(0, true);
    InterleaveResult il = windmill_interleave_check(wm, 64);
    REQ(il.ok);
    REQ(il.sigma.size() == 4);
    return true;
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(LFSM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool criterion_explorers() {
    // No published numbers exist for the avalanche comparison or the
    // empirical trial curve; the CSV emitters cover them at property level.
    int code = 0;
    std::string trials = run_cli("explore trials --n-list 8,12 --seeds 25", code);
    REQ(code == 0);
    REQ(trials.rfind("n,feedbacks,seeds,mean_trials,expected_trials,ratio", 0) == 0);
    int lines = 0;
    for (char c : trials)
        if (c == '\n') ++lines;
    REQ(lines == 3);
    // every ratio within the statistical acceptance band
    std::istringstream is(trials);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        double ratio = std::stod(line.substr(line.rfind(',') + 1));
        REQ(ratio <= 2.0);
        REQ(ratio >= 0.5);
    }

    Lfsm g = build_classic(ClassicKind::galois, P("x^12+x^11+x^9+x^7+x^6+x^5+1"));
    std::string j = lfsm_to_json(g);
    {
        std::ofstream f("/tmp/lfsm_acc_av.json");
        f << j;
    }
    std::string av =
        run_cli("explore avalanche --in /tmp/lfsm_acc_av.json --bit 0 --horizon 24", code);
    REQ(code == 0);
    REQ(av.rfind("t,correlation_num,correlation_den,correlation", 0) == 0);
    lines = 0;
    for (char c : av)
        if (c == '\n') ++lines;
    REQ(lines == 26);  // header + t = 0..24
    return true;
}

struct Criterion {
    const char* name;
    std::function<bool()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"8-bit register trio golden simulation", criterion_table1},
        {"windmill clock-by-clock golden run", criterion_table2},
        {"adjugate entry fixtures", criterion_adjugate},
        {"filtered-register transfer entries and output series", criterion_filtered},
        {"two-node example: inverse entries and expansions", criterion_l1},
        {"three-node example: sizes and determinants", criterion_l2},
        {"three-vane composition costs", criterion_three_vane},
        {"128-bit ring fixture", criterion_ring128},
        {"512-bit diffusion fixtures (partial: degree 512 unfactored)",
         criterion_snow_word512},
        {"40-bit word machine fixture", criterion_word40},
        {"maximal-length sequence property suite", criterion_mseq},
        {"generator trial statistics and postconditions", criterion_generator_stats},
        {"oracle equivalence suites (a)-(g)", criterion_oracles},
        {"windmill interleaving", criterion_interleave},
        {"exploratory CSV emitters", criterion_explorers},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        g_criterion_failures = 0;
        bool threw = false;
        try {
            criteria[i].fn();
        } catch (const std::exception& e) {
            threw = true;
            std::cerr << "    exception: " << e.what() << "\n";
        }
        bool ok = !threw && g_criterion_failures == 0;
        std::printf("criterion %2zu: %s  %s\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name);
        if (!ok) ++failed;
    }
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
