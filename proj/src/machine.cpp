#include "lfsm/machine.hpp"

#include <stdexcept>

#include "json.hpp"

namespace lfsm {

Lfsm Lfsm::autonomous(BitMatrix a, BitMatrix c, BitVec initial) {
    Lfsm m{std::move(a), BitMatrix(0, 0), std::move(c), std::move(initial)};
    m.B = BitMatrix(m.A.rows(), 0);
    m.validate();
    return m;
}

void Lfsm::validate() const {
    if (A.rows() != A.cols()) throw std::invalid_argument("A must be square");
    if (B.rows() != A.rows()) throw std::invalid_argument("B row count must equal n");
    if (C.cols() != A.rows()) throw std::invalid_argument("C column count must equal n");
    if (state.size() != A.rows()) throw std::invalid_argument("state length must equal n");
}

BitVec lfsm_step(Lfsm& machine, const BitVec& u) {
    if (u.size() != machine.k())
        throw std::invalid_argument("input length must equal k");
    BitVec v = machine.C * machine.state;
    BitVec next = machine.A * machine.state;
    if (machine.k() > 0) next ^= machine.B * u;
    machine.state = std::move(next);
    return v;
}

std::vector<BitSequence> simulate_cells(Lfsm machine, int steps) {
    int n = machine.n();
    std::vector<BitSequence> out(n);
    for (auto& s : out) s.reserve(steps);
    BitVec zero(machine.k());
    for (int t = 0; t < steps; ++t) {
        for (int i = 0; i < n; ++i) out[i].push_back(machine.state.get(i));
        lfsm_step(machine, zero);
    }
    return out;
}

std::vector<BitSequence> simulate_outputs(Lfsm machine, int steps,
                                          const std::vector<BitVec>& inputs) {
    std::vector<BitSequence> out(machine.l());
    for (auto& s : out) s.reserve(steps);
    BitVec zero(machine.k());
    for (int t = 0; t < steps; ++t) {
        const BitVec& u = t < static_cast<int>(inputs.size()) ? inputs[t] : zero;
        BitVec v = lfsm_step(machine, u);
        for (int i = 0; i < machine.l(); ++i) out[i].push_back(v.get(i));
    }
    return out;
}

std::string state_display(const BitVec& m) {
    std::string s;
    for (int i = m.size(); i-- > 1;) s.push_back(m.get(i) ? '1' : '0');
    s.push_back(' ');
    s.push_back(m.get(0) ? '1' : '0');
    return s;
}

CellSeries cell_series(const Lfsm& machine, const std::vector<Gf2Poly>& input) {
    machine.validate();
    if (!input.empty() && static_cast<int>(input.size()) != machine.k())
        throw std::invalid_argument("one input polynomial per input line required");
    int n = machine.n();
    Gf2Poly q = connection_polynomial(machine.A);
    PolyMatrix adj = adjunct_ixa(machine.A);
    // numerator vector: m + X B U
    std::vector<Gf2Poly> rhs(n);
    for (int j = 0; j < n; ++j) {
        if (machine.state.get(j)) rhs[j] = Gf2Poly::one();
        if (!input.empty())
            for (int t = 0; t < machine.k(); ++t)
                if (machine.B.get(j, t)) rhs[j] += input[t].shifted(1);
    }
    CellSeries result;
    result.cells.reserve(n);
    std::vector<Gf2Poly> nums(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (!rhs[j].is_zero()) nums[i] += adj.at(i, j) * rhs[j];
        result.cells.emplace_back(nums[i], q);
    }
    result.outputs.reserve(machine.l());
    for (int i = 0; i < machine.l(); ++i) {
        Gf2Poly num;
        for (int j = 0; j < n; ++j)
            if (machine.C.get(i, j)) num += nums[j];
        result.outputs.emplace_back(std::move(num), q);
    }
    return result;
}

Lfsm similarity(const Lfsm& machine, const BitMatrix& p) {
    machine.validate();
    auto inv = p.inverse();
    if (!inv) throw std::invalid_argument("similarity transform must be invertible");
    Lfsm out;
    out.A = *inv * machine.A * p;
    out.B = *inv * machine.B;
    out.C = machine.C * p;
    out.state = *inv * machine.state;
    return out;
}

bool p_sequence_check(const Lfsm& machine, int steps) {
    machine.validate();
    if (machine.k() != 0) throw std::invalid_argument("autonomous machine required");
    Gf2Poly q = connection_polynomial(machine.A);
    PolyMatrix adj = adjunct_ixa(machine.A);
    int n = machine.n();
    auto p_of = [&](const BitVec& m) {
        std::vector<Gf2Poly> p(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.get(j)) p[i] += adj.at(i, j);
        return p;
    };
    Lfsm work = machine;
    std::vector<Gf2Poly> p = p_of(work.state);
    for (int t = 0; t < steps; ++t) {
        lfsm_step(work);
        std::vector<Gf2Poly> p_next = p_of(work.state);
        for (int i = 0; i < n; ++i)
            if ((p_next[i].shifted(1) + p[i]) % q != Gf2Poly::zero()) return false;
        p = std::move(p_next);
    }
    return true;
}

namespace {

nlohmann::json coords_json(const BitMatrix& m) {
    auto arr = nlohmann::json::array();
    for (auto [i, j] : m.coords()) arr.push_back({i, j});
    return arr;
}

BitMatrix coords_from_json(const nlohmann::json& arr, int rows, int cols) {
    std::vector<std::pair<int, int>> coords;
    for (const auto& e : arr) coords.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return BitMatrix::from_coords(rows, cols, coords);
}

}  // namespace

std::string lfsm_to_json(const Lfsm& machine, bool pretty) {
    machine.validate();
    nlohmann::json j;
    j["kind"] = "lfsm";
    j["n"] = machine.n();
    j["k"] = machine.k();
    j["l"] = machine.l();
    j["A"] = coords_json(machine.A);
    j["B"] = coords_json(machine.B);
    j["C"] = coords_json(machine.C);
    j["state"] = machine.state.to_hex();
    return pretty ? j.dump(2) : j.dump();
}

Lfsm lfsm_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("kind").get<std::string>() != "lfsm")
        throw std::invalid_argument("expected kind \"lfsm\"");
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    int l = j.at("l").get<int>();
    Lfsm m;
    m.A = coords_from_json(j.at("A"), n, n);
    m.B = coords_from_json(j.at("B"), n, k);
    m.C = coords_from_json(j.at("C"), l, n);
    m.state = j.contains("state") ? BitVec::from_hex(j.at("state").get<std::string>(), n)
                                  : BitVec(n);
    m.validate();
    return m;
}

}  // namespace lfsm
