#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfsm/machine.hpp"

namespace lfsm {

enum class ClassicKind { galois, fibonacci, cellular, top_bottom };

// Ring LFSR: cyclic-shift skeleton a_{i,i+1} (indices mod n) plus extra
// feedback 1s.
struct RingSpec {
    int n = 0;
    std::vector<std::pair<int, int>> feedbacks;

    // Text form "n=128; (4,78) (5,19) ...".
    static RingSpec parse(const std::string& text);
    std::string to_text() const;
};

// Word-oriented LFSR: n/k word cells of k bits; each block places I, L^s
// or R^s (over/sub-diagonal shift matrices) at word position (row, col).
struct WordBlockSpec {
    enum class Op { I, L, R };
    struct Block {
        int row = 0, col = 0;
        Op op = Op::I;
        int shift = 0;  // 0 for I, else 1..k-1
    };
    int n = 0, k = 0;
    std::vector<Block> blocks;

    int words() const { return k > 0 ? n / k : 0; }
};

std::string word_spec_to_json(const WordBlockSpec& spec, bool pretty = false);
WordBlockSpec word_spec_from_json(const std::string& json_text);

struct HardwareMetrics {
    int critical_path = 0;  // max_i ceil(log2(w_H(row_i))), weight<=1 rows give 0
    int fan_out = 0;        // max_j w_H(col_j)
    int cost = 0;           // w_H(A) - n
    int weight_q = 0;       // w_H(connection polynomial)
};

// Galois/Fibonacci/top-bottom take the connection polynomial Q (Q(0)=1,
// deg Q = n >= 2); cellular takes the tri-diagonal q-vector instead. For
// top_bottom, `split` = s keeps the terms of Q of degree <= s in the
// Galois column; Q + X^n must factor as (1+g)(1+f) along that split
// (split -1 searches all s and picks the first that works; s = 0 always
// does). Output cell is cell 0.
Lfsm build_classic(ClassicKind kind, const Gf2Poly& q, int split = -1);
Lfsm build_cellular(const std::vector<std::uint8_t>& diagonal);

Lfsm build_ring(const RingSpec& spec);
Lfsm build_word(const WordBlockSpec& spec);
BitMatrix word_block_matrix(const WordBlockSpec& spec);

// One clock of a word LFSR directly on k-bit words (k <= 64); must agree
// with bit-level stepping of build_word.
void word_step(const WordBlockSpec& spec, std::vector<std::uint64_t>& words);

// SNOW 2.0 LFSR over F2: 512x512 with I32 shift blocks and M_alpha /
// M_alpha^-1 feedback blocks.
Lfsm build_snow2();
BitMatrix snow2_malpha();

HardwareMetrics hardware_metrics(const BitMatrix& a);

// Built-in fixture specs.
RingSpec appendix_ring128_spec();     // 128-bit ring LFSR, 64 feedbacks
WordBlockSpec word512_spec();         // 512-bit word LFSR, k = 32
WordBlockSpec word40_spec();          // 40-bit software LFSR, k = 8
Lfsm ring_t2();                       // the 8-bit ring with Q = x^8+x^6+x^5+x^3+1

}  // namespace lfsm
