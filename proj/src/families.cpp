#include "lfsm/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lfsm {

namespace {

void check_q(const Gf2Poly& q) {
    if (!q.constant_term()) throw std::invalid_argument("Q(0) must be 1");
    if (q.degree() < 2) throw std::invalid_argument("deg Q must be >= 2");
}

BitMatrix superdiagonal(int n) {
    BitMatrix a(n, n);
    for (int i = 0; i + 1 < n; ++i) a.set(i, i + 1, true);
    return a;
}

Lfsm with_cell0_output(BitMatrix a) {
    int n = a.rows();
    BitMatrix c(1, n);
    c.set(0, 0, true);
    return Lfsm::autonomous(std::move(a), std::move(c), BitVec(n));
}

}  // namespace

Lfsm build_classic(ClassicKind kind, const Gf2Poly& q, int split) {
    check_q(q);
    int n = q.degree();
    switch (kind) {
        case ClassicKind::galois: {
            BitMatrix a = superdiagonal(n);
            for (int r = 0; r < n; ++r)
                if (q.coeff(r + 1)) a.set(r, 0, true);  // column 0 holds q_1..q_n
            return with_cell0_output(std::move(a));
        }
        case ClassicKind::fibonacci: {
            BitMatrix a = superdiagonal(n);
            for (int c = 0; c < n; ++c)
                if (q.coeff(n - c)) a.set(n - 1, c, true);  // bottom row q_n..q_1
            return with_cell0_output(std::move(a));
        }
        case ClassicKind::cellular:
            throw std::invalid_argument("cellular takes a diagonal q-vector; use build_cellular");
        case ClassicKind::top_bottom: {
            // Ring skeleton closure at (n-1,0) supplies the X^n cycle; a
            // Galois entry at (r,0), r <= s-1, supplies X^(r+1); a bottom-row
            // entry at (n-1,c), c >= s, supplies X^(n-c); a Galois/bottom pair
            // is always a disjoint cycle pair, so
            //   det(I - XA) = (1 + g)(1 + f) + X^n
            // with g the Galois terms and f the bottom-row terms. Hence the
            // split must divide Q + X^n exactly.
            Gf2Poly p = q + Gf2Poly::monomial(n);
            auto try_split = [&](int s) -> std::optional<Lfsm> {
                Gf2Poly one_g = Gf2Poly::one();
                for (int d = 1; d <= s; ++d)
                    if (q.coeff(d)) one_g.set_coeff(d, true);
                auto [one_f, rem] = p.divmod(one_g);
                if (!rem.is_zero() || !one_f.constant_term()) return std::nullopt;
                if (one_f.degree() > n - s) return std::nullopt;
                for (int d = 1; d <= one_f.degree(); ++d)
                    if (one_f.coeff(d) && n - d < s) return std::nullopt;
                BitMatrix a = superdiagonal(n);
                a.set(n - 1, 0, true);
                for (int d = 1; d <= s; ++d)
                    if (one_g.coeff(d)) a.set(d - 1, 0, true);
                for (int d = 1; d <= one_f.degree(); ++d)
                    if (one_f.coeff(d)) a.set(n - 1, n - d, true);
                return with_cell0_output(std::move(a));
            };
            if (split >= 0) {
                auto r = try_split(split);
                if (!r) throw std::invalid_argument("top_bottom split incompatible with Q");
                return *r;
            }
            for (int s = n - 1; s >= 0; --s)
                if (auto r = try_split(s)) return *r;
            throw std::logic_error("top_bottom: no feasible split");  // s=0 always works
        }
    }
    throw std::invalid_argument("unknown classic kind");
}

Lfsm build_cellular(const std::vector<std::uint8_t>& diagonal) {
    int n = static_cast<int>(diagonal.size());
    if (n < 2) throw std::invalid_argument("cellular automaton needs n >= 2");
    BitMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        if (diagonal[i]) a.set(i, i, true);
        if (i + 1 < n) {
            a.set(i, i + 1, true);
            a.set(i + 1, i, true);
        }
    }
    return with_cell0_output(std::move(a));
}

RingSpec RingSpec::parse(const std::string& text) {
    RingSpec spec;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::size_t pos = s.find("n=");
    if (pos != 0) throw std::invalid_argument("ring spec must start with n=");
    std::size_t semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("ring spec missing ';'");
    spec.n = std::stoi(s.substr(2, semi - 2));
    std::size_t i = semi + 1;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in ring spec");
        std::size_t comma = s.find(',', i);
        std::size_t close = s.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("malformed pair in ring spec");
        int a = std::stoi(s.substr(i + 1, comma - i - 1));
        int b = std::stoi(s.substr(comma + 1, close - comma - 1));
        spec.feedbacks.emplace_back(a, b);
        i = close + 1;
    }
    return spec;
}

std::string RingSpec::to_text() const {
    std::ostringstream os;
    os << "n=" << n << ";";
    for (auto [i, j] : feedbacks) os << " (" << i << "," << j << ")";
    return os.str();
}

std::string word_spec_to_json(const WordBlockSpec& spec, bool pretty) {
    nlohmann::json j;
    j["kind"] = "word";
    j["n"] = spec.n;
    j["k"] = spec.k;
    auto arr = nlohmann::json::array();
    for (const auto& b : spec.blocks) {
        const char* op = b.op == WordBlockSpec::Op::I ? "I"
                       : b.op == WordBlockSpec::Op::L ? "L" : "R";
        arr.push_back({{"row", b.row}, {"col", b.col}, {"op", op}, {"shift", b.shift}});
    }
    j["blocks"] = arr;
    return pretty ? j.dump(2) : j.dump();
}

WordBlockSpec word_spec_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("kind").get<std::string>() != "word")
        throw std::invalid_argument("expected kind \"word\"");
    WordBlockSpec spec;
    spec.n = j.at("n").get<int>();
    spec.k = j.at("k").get<int>();
    for (const auto& e : j.at("blocks")) {
        WordBlockSpec::Block b;
        b.row = e.at("row").get<int>();
        b.col = e.at("col").get<int>();
        std::string op = e.at("op").get<std::string>();
        if (op == "I") b.op = WordBlockSpec::Op::I;
        else if (op == "L") b.op = WordBlockSpec::Op::L;
        else if (op == "R") b.op = WordBlockSpec::Op::R;
        else throw std::invalid_argument("unknown block op " + op);
        b.shift = e.at("shift").get<int>();
        spec.blocks.push_back(b);
    }
    return spec;
}

Lfsm build_ring(const RingSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("ring needs n >= 2");
    BitMatrix a(spec.n, spec.n);
    for (int i = 0; i + 1 < spec.n; ++i) a.set(i, i + 1, true);
    a.set(spec.n - 1, 0, true);
    for (auto [i, j] : spec.feedbacks) {
        if (i < 0 || i >= spec.n || j < 0 || j >= spec.n)
            throw std::invalid_argument("feedback position out of range");
        a.set(i, j, true);  // idempotent for duplicates
    }
    return with_cell0_output(std::move(a));
}

BitMatrix word_block_matrix(const WordBlockSpec& spec) {
    if (spec.k <= 0 || spec.n <= 0 || spec.n % spec.k != 0)
        throw std::invalid_argument("word spec requires k | n");
    int w = spec.words(), k = spec.k;
    BitMatrix a(spec.n, spec.n);
    for (const auto& b : spec.blocks) {
        if (b.row < 0 || b.row >= w || b.col < 0 || b.col >= w)
            throw std::invalid_argument("block position out of range");
        int s = b.shift;
        if (b.op == WordBlockSpec::Op::I ? s != 0 : (s < 1 || s > k - 1))
            throw std::invalid_argument("bad shift amount");
        for (int i = 0; i < k; ++i) {
            // L has 1s at (i, i+1): L^s maps bit i+s to position i.
            int j = b.op == WordBlockSpec::Op::I ? i : b.op == WordBlockSpec::Op::L ? i + s : i - s;
            if (j >= 0 && j < k) a.set(b.row * k + i, b.col * k + j, true);
        }
    }
    return a;
}

Lfsm build_word(const WordBlockSpec& spec) {
    return with_cell0_output(word_block_matrix(spec));
}

void word_step(const WordBlockSpec& spec, std::vector<std::uint64_t>& words) {
    if (spec.k > 64) throw std::invalid_argument("word_step supports k <= 64");
    if (static_cast<int>(words.size()) != spec.words())
        throw std::invalid_argument("word count mismatch");
    std::uint64_t mask = spec.k == 64 ? ~0ull : (1ull << spec.k) - 1;
    std::vector<std::uint64_t> next(words.size(), 0);
    for (const auto& b : spec.blocks) {
        std::uint64_t v = words[b.col] & mask;
        // Word value packs bit i of the cell at bit i; L^s drops the s low
        // cells and R^s drops the s high cells, matching the block matrix.
        if (b.op == WordBlockSpec::Op::L) v >>= b.shift;
        else if (b.op == WordBlockSpec::Op::R) v = (v << b.shift) & mask;
        next[b.row] ^= v;
    }
    words = std::move(next);
}

BitMatrix snow2_malpha() {
    static const std::uint32_t kV[8] = {0xE19FCF13u, 0x6B973726u, 0xD6876E4Cu,
                                        0x05A7DC98u, 0x0AE71199u, 0x1467229Bu,
                                        0x28CE449Fu, 0x50358897u};
    BitMatrix m(32, 32);
    // Byte c_t moves to byte slot t+1; byte c_3 multiplies the V columns.
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 8; ++i) m.set((b + 1) * 8 + i, b * 8 + i, true);
    for (int t = 0; t < 8; ++t)
        for (int i = 0; i < 32; ++i)
            if ((kV[t] >> i) & 1) m.set(i, 24 + t, true);
    return m;
}

Lfsm build_snow2() {
    BitMatrix malpha = snow2_malpha();
    auto inv = malpha.inverse();
    if (!inv) throw std::logic_error("M_alpha must be invertible");
    BitMatrix a(512, 512);
    for (int b = 0; b + 1 < 16; ++b)
        for (int i = 0; i < 32; ++i) a.set(b * 32 + i, (b + 1) * 32 + i, true);
    a.xor_block(15 * 32, 0 * 32, malpha);
    for (int i = 0; i < 32; ++i) a.set(15 * 32 + i, 2 * 32 + i, true);
    a.xor_block(15 * 32, 11 * 32, *inv);
    return with_cell0_output(std::move(a));
}

HardwareMetrics hardware_metrics(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("square matrix required");
    HardwareMetrics m;
    for (int i = 0; i < a.rows(); ++i) {
        int w = a.row_weight(i);
        int cp = 0;
        while ((1 << cp) < w) ++cp;  // ceil(log2(w)); w <= 1 is a plain wire
        m.critical_path = std::max(m.critical_path, cp);
    }
    for (int j = 0; j < a.cols(); ++j) m.fan_out = std::max(m.fan_out, a.col_weight(j));
    m.cost = a.weight() - a.rows();
    m.weight_q = connection_polynomial(a).weight();
    return m;
}

RingSpec appendix_ring128_spec() {
    RingSpec spec;
    spec.n = 128;
    spec.feedbacks = {
        {4, 78},   {5, 19},   {8, 44},   {9, 106},  {10, 70},  {12, 14},
        {14, 115}, {15, 55},  {17, 82},  {21, 64},  {22, 12},  {25, 127},
        {27, 107}, {28, 112}, {31, 59},  {34, 111}, {35, 48},  {37, 36},
        {38, 23},  {39, 88},  {43, 37},  {44, 26},  {46, 60},  {47, 100},
        {49, 24},  {50, 25},  {51, 2},   {51, 27},  {55, 124}, {57, 113},
        {59, 71},  {61, 29},  {69, 123}, {72, 52},  {73, 118}, {77, 46},
        {80, 74},  {81, 83},  {83, 98},  {87, 53},  {88, 73},  {91, 47},
        {93, 10},  {94, 21},  {95, 93},  {97, 13},  {98, 117}, {99, 50},
        {100, 3},  {101, 104},{104, 1},  {105, 114},{106, 108},{107, 105},
        {109, 4},  {111, 28}, {112, 68}, {113, 42}, {114, 31}, {119, 18},
        {120, 49}, {121, 32}, {123, 94}, {124, 6},
    };
    return spec;
}

WordBlockSpec word512_spec() {
    using Op = WordBlockSpec::Op;
    WordBlockSpec spec;
    spec.n = 512;
    spec.k = 32;
    for (int i = 0; i < 16; ++i) spec.blocks.push_back({i, (i + 1) % 16, Op::I, 0});
    spec.blocks.push_back({1, 8, Op::R, 14});
    spec.blocks.push_back({2, 6, Op::L, 8});
    spec.blocks.push_back({3, 11, Op::L, 12});
    spec.blocks.push_back({5, 5, Op::L, 2});
    spec.blocks.push_back({7, 14, Op::R, 11});
    spec.blocks.push_back({8, 0, Op::L, 13});
    spec.blocks.push_back({13, 11, Op::R, 13});
    spec.blocks.push_back({15, 2, Op::R, 10});
    return spec;
}

WordBlockSpec word40_spec() {
    using Op = WordBlockSpec::Op;
    WordBlockSpec spec;
    spec.n = 40;
    spec.k = 8;
    for (int i = 0; i < 5; ++i) spec.blocks.push_back({i, (i + 1) % 5, Op::I, 0});
    spec.blocks.push_back({0, 3, Op::R, 1});
    spec.blocks.push_back({3, 2, Op::L, 3});
    spec.blocks.push_back({4, 1, Op::L, 1});
    return spec;
}

Lfsm ring_t2() {
    return build_ring(RingSpec{8, {{3, 7}, {7, 0}, {7, 2}}});
}

}  // namespace lfsm
