#include "lfsm/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace lfsm {

namespace {

Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
    return (a * b) / gcd(a, b);
}

}  // namespace

RationalMatrix::RationalMatrix(int n)
    : n_(n),
      entries_(static_cast<std::size_t>(n) * n),
      nums_(static_cast<std::size_t>(n) * n),
      row_den_(n, Gf2Poly::one()) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
}

void RationalMatrix::set(int i, int j, RationalSeries r) {
    entries_[idx(i, j)] = std::move(r);
    normalize_row(i);
}

void RationalMatrix::normalize_row(int i) {
    Gf2Poly q = Gf2Poly::one();
    for (int j = 0; j < n_; ++j)
        if (!entries_[idx(i, j)].is_zero()) q = lcm(q, entries_[idx(i, j)].den());
    row_den_[i] = q;
    for (int j = 0; j < n_; ++j) {
        const RationalSeries& e = entries_[idx(i, j)];
        nums_[idx(i, j)] = e.is_zero() ? Gf2Poly::zero() : e.num() * (q / e.den());
    }
}

int RationalMatrix::carry_bound(int i) const {
    int bound = 0;
    for (int j = 0; j < n_; ++j) {
        const Gf2Poly& r = nums_[idx(i, j)];
        if (!r.is_zero()) bound = std::max(bound, r.degree());
    }
    return bound;
}

Gf2Poly RationalMatrix::g() const {
    Gf2Poly g = Gf2Poly::one();
    for (int i = 0; i < n_; ++i) g = g * row_den_[i];
    return g;
}

Rlfsm::Rlfsm(RationalMatrix a)
    : A(std::move(a)), C(BitMatrix::identity(A.dim())), m(A.dim()),
      carry_num(A.dim()) {}

bool Rlfsm::carry_in_domain() const {
    for (int i = 0; i < n(); ++i) {
        if (carry_num[i].is_zero()) continue;
        if (carry_num[i].degree() >= A.carry_bound(i)) return false;
    }
    return true;
}

void Rlfsm::validate() const {
    if (C.cols() != n()) throw std::invalid_argument("C column count must equal n");
    if (m.size() != n() || static_cast<int>(carry_num.size()) != n())
        throw std::invalid_argument("state size mismatch");
}

BitVec rlfsm_step(Rlfsm& machine) {
    machine.validate();
    int n = machine.n();
    BitVec v = machine.C * machine.m;
    BitVec next(n);
    std::vector<Gf2Poly> next_carry(n);
    for (int i = 0; i < n; ++i) {
        // mu_i = (sum_j m_j R_{i,j} + carry_num_i) / Q_i with Q_i(0) = 1:
        // the output bit is the numerator's constant term, the carry is the
        // remaining fraction shifted down one degree.
        Gf2Poly rsum = machine.carry_num[i];
        for (int j = 0; j < n; ++j)
            if (machine.m.get(j)) rsum += machine.A.num(i, j);
        bool bit = rsum.constant_term();
        next.set(i, bit);
        if (bit) rsum += machine.A.row_den(i);
        next_carry[i] = rsum.shifted_down(1);
    }
    machine.m = std::move(next);
    machine.carry_num = std::move(next_carry);
    return v;
}

std::vector<BitSequence> rlfsm_simulate(Rlfsm machine, int steps) {
    int n = machine.n();
    std::vector<BitSequence> out(n);
    for (auto& s : out) s.reserve(steps);
    for (int t = 0; t < steps; ++t) {
        for (int i = 0; i < n; ++i) out[i].push_back(machine.m.get(i));
        rlfsm_step(machine);
    }
    return out;
}

RationalConnection rational_connection(const RationalMatrix& a) {
    int n = a.dim();
    // Clear denominators row by row: row i of M is Q_i (I - XA) row i,
    // so det M = det(I - XA) * prod Q_i.
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Gf2Poly e = a.num(i, j).shifted(1);  // X R_{i,j}
            if (i == j) e += a.row_den(i);
            m.at(i, j) = std::move(e);
        }
    Gf2Poly det_m = m.det_expansion();
    Gf2Poly g = a.g();
    RationalConnection result;
    result.det = RationalSeries(det_m, g);
    // T = det(G (I - XA)) = G^n det(I-XA) = G^(n-1) det M.
    Gf2Poly t = det_m;
    for (int i = 1; i < n; ++i) t = t * g;
    result.t = std::move(t);
    return result;
}

RationalSeries i_minus_xa_inverse_entry(const RationalMatrix& a, int i, int j) {
    int n = a.dim();
    // With D = diag(Q_i) and M = D (I - XA):
    // (I - XA)^-1 = M^-1 D, entry (i,j) = cof_{j,i}(M) Q_j / det M.
    PolyMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Gf2Poly e = a.num(r, c).shifted(1);
            if (r == c) e += a.row_den(r);
            m.at(r, c) = std::move(e);
        }
    return RationalSeries(m.cofactor(j, i) * a.row_den(j), m.det_expansion());
}

RationalMatrix windmill_matrix(const WindmillSpec& spec) {
    int v = spec.vanes();
    if (v < 1) throw std::invalid_argument("windmill needs at least one vane");
    if (!spec.beta.constant_term()) throw std::invalid_argument("beta(0) must be 1");
    RationalMatrix a(v);
    for (int j = 0; j < v; ++j) {
        if (spec.shifts[j] < 0) throw std::invalid_argument("negative vane shift");
        a.set(j, (j + 1) % v,
              RationalSeries(spec.alpha.shifted(spec.shifts[j]), spec.beta));
    }
    return a;
}

Rlfsm build_windmill(const WindmillSpec& spec) { return Rlfsm(windmill_matrix(spec)); }

InterleaveResult windmill_interleave_check(const Rlfsm& machine, int horizon) {
    int v = machine.n();
    if (v > 8) throw std::invalid_argument("permutation search limited to v <= 8");
    Gf2Poly q = rational_connection(machine.A).det.num();
    // Q(X^v)
    Gf2Poly qv;
    for (int d = 0; d <= q.degree(); ++d)
        if (q.coeff(d)) qv.set_coeff(d * v, true);
    if (static_cast<long long>(horizon) * v < 2LL * qv.degree() + 2)
        throw std::invalid_argument("insufficient horizon");
    auto streams = rlfsm_simulate(machine, horizon);
    std::vector<int> sigma(v);
    for (int i = 0; i < v; ++i) sigma[i] = i;
    InterleaveResult result;
    do {
        BitSequence s(static_cast<std::size_t>(horizon) * v, 0);
        for (int t = 0; t < horizon; ++t)
            for (int i = 0; i < v; ++i)
                s[static_cast<std::size_t>(t) * v + sigma[i]] = streams[i][t];
        if (min_poly(s).divides(qv)) {
            result.sigma = sigma;
            result.ok = true;
            return result;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return result;
}

RationalSeries transfer_function(const Lfsm& machine) {
    machine.validate();
    if (machine.k() != 1 || machine.l() != 1)
        throw std::invalid_argument("transfer requires 1 input and 1 output");
    Gf2Poly q = connection_polynomial(machine.A);
    PolyMatrix adj = adjunct_ixa(machine.A);
    Gf2Poly num;
    for (int i = 0; i < machine.n(); ++i) {
        if (!machine.C.get(0, i)) continue;
        for (int j = 0; j < machine.n(); ++j)
            if (machine.B.get(j, 0)) num += adj.at(i, j);
    }
    return RationalSeries(num.shifted(1), q);
}

RationalSeries vane_transfer(const Lfsm& machine, int i0, int j0) {
    if (machine.B.col_weight(0) != 1 || machine.C.row_weight(0) != 1)
        throw std::invalid_argument("vane_transfer requires unit-weight B and C");
    if (!machine.B.get(i0, 0) || !machine.C.get(0, j0))
        throw std::invalid_argument("(i0, j0) does not match B and C");
    return transfer_function(machine);
}

Lfsm compile_vane(const RationalSeries& r) {
    if (r.num().constant_term())
        throw std::invalid_argument("feedthrough required: transfer must vanish at 0");
    const Gf2Poly& den = r.den();
    int d = std::max(r.num().degree(), den.degree());
    if (d < 1) d = 1;  // the zero transfer still needs one cell
    Lfsm vane;
    vane.A = BitMatrix(d, d);
    for (int i = 0; i + 1 < d; ++i) vane.A.set(i, i + 1, true);
    for (int t = 1; t <= d; ++t)
        if (den.coeff(t)) vane.A.set(t - 1, 0, true);
    vane.B = BitMatrix(d, 1);
    for (int t = 1; t <= d; ++t)
        if (r.num().coeff(t)) vane.B.set(t - 1, 0, true);
    vane.C = BitMatrix(1, d);
    vane.C.set(0, 0, true);
    vane.state = BitVec(d);
    return vane;
}

namespace {

Expansion assemble_network(const Rlfsm& machine,
                           const std::vector<std::tuple<int, int, Lfsm>>& parts) {
    // parts: (row, col, component); the component's output feeds node `row`
    // and its input reads node `col`. Nodes are the sums of the component
    // output rows; input columns are wired combinationally through them.
    int n = machine.n();
    int cells = 0;
    for (const auto& [i, j, comp] : parts) cells += comp.n();
    std::vector<int> offset(parts.size());
    {
        int o = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            offset[p] = o;
            o += std::get<2>(parts[p]).n();
        }
    }
    BitMatrix nodes(n, cells);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& [i, j, comp] = parts[p];
        for (int c = 0; c < comp.n(); ++c)
            if (comp.C.get(0, c)) nodes.set(i, offset[p] + c, true);
    }
    BitMatrix a(cells, cells);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& [i, j, comp] = parts[p];
        a.xor_block(offset[p], offset[p], comp.A);
        for (int c = 0; c < comp.n(); ++c) {
            if (!comp.B.get(c, 0)) continue;
            for (int g = 0; g < cells; ++g)
                if (nodes.get(j, g)) a.set(offset[p] + c, g, !a.get(offset[p] + c, g));
        }
    }
    Expansion out;
    out.cells = cells;
    out.nodes = nodes;
    out.machine = Lfsm::autonomous(std::move(a), machine.C * nodes, BitVec(cells));
    return out;
}

}  // namespace

Expansion expand_rlfsm(const Rlfsm& machine, ExpandStrategy strategy) {
    int n = machine.n();
    std::vector<std::tuple<int, int, Lfsm>> parts;
    if (strategy == ExpandStrategy::per_coefficient) {
        // One Galois vane per nonzero coefficient, realizing X A_{i,j};
        // column-major order.
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (machine.A.is_zero(i, j)) continue;
                const RationalSeries& e = machine.A.at(i, j);
                parts.emplace_back(i, j,
                                   compile_vane(RationalSeries(e.num().shifted(1), e.den())));
            }
    } else {
        // One multi-input machine per row over the normalized denominator.
        for (int i = 0; i < n; ++i) {
            const Gf2Poly& q = machine.A.row_den(i);
            int d = std::max(q.degree(), 1 + machine.A.carry_bound(i));
            if (d < 1) d = 1;
            Lfsm block;
            block.A = BitMatrix(d, d);
            for (int r = 0; r + 1 < d; ++r) block.A.set(r, r + 1, true);
            for (int t = 1; t <= d; ++t)
                if (q.coeff(t)) block.A.set(t - 1, 0, true);
            block.B = BitMatrix(d, n);
            for (int j = 0; j < n; ++j) {
                Gf2Poly num = machine.A.num(i, j).shifted(1);  // X R_{i,j}
                for (int t = 1; t <= d; ++t)
                    if (num.coeff(t)) block.B.set(t - 1, j, true);
            }
            block.C = BitMatrix(1, d);
            block.C.set(0, 0, true);
            block.state = BitVec(d);
            // Split the multi-input block into per-column parts sharing the
            // same cells: emulate by one part per input column j.
            // assemble_network expects single-input parts, so wrap: we add
            // the block once with input column 0 and patch the remaining
            // columns below via a custom assembly.
            parts.emplace_back(i, i, std::move(block));
        }
        // Custom assembly for multi-input row blocks.
        int cells = 0;
        std::vector<int> offset(parts.size());
        for (std::size_t p = 0; p < parts.size(); ++p) {
            offset[p] = cells;
            cells += std::get<2>(parts[p]).n();
        }
        BitMatrix nodes(n, cells);
        for (std::size_t p = 0; p < parts.size(); ++p)
            nodes.set(std::get<0>(parts[p]), offset[p], true);  // lead cell
        BitMatrix a(cells, cells);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const Lfsm& comp = std::get<2>(parts[p]);
            a.xor_block(offset[p], offset[p], comp.A);
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < comp.n(); ++c) {
                    if (!comp.B.get(c, j)) continue;
                    for (int g = 0; g < cells; ++g)
                        if (nodes.get(j, g))
                            a.set(offset[p] + c, g, !a.get(offset[p] + c, g));
                }
        }
        Expansion out;
        out.cells = cells;
        out.nodes = nodes;
        out.machine = Lfsm::autonomous(std::move(a), machine.C * nodes, BitVec(cells));
        return out;
    }
    return assemble_network(machine, parts);
}

Expansion expand_block(const Rlfsm& machine, const std::vector<Lfsm>& components) {
    int n = machine.n();
    std::vector<std::tuple<int, int, Lfsm>> parts;
    std::size_t next = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (machine.A.is_zero(i, j)) continue;
            if (next >= components.size())
                throw std::invalid_argument("one component per nonzero entry required");
            const Lfsm& comp = components[next++];
            if (comp.k() != 1 || comp.l() != 1)
                throw std::invalid_argument("components must be 1-in/1-out");
            parts.emplace_back(i, j, comp);
        }
    if (next != components.size())
        throw std::invalid_argument("one component per nonzero entry required");
    return assemble_network(machine, parts);
}

std::string rlfsm_to_json(const Rlfsm& machine, bool pretty) {
    machine.validate();
    nlohmann::json j;
    j["kind"] = "rlfsm";
    j["n"] = machine.n();
    auto entries = nlohmann::json::array();
    for (int row = 0; row < machine.n(); ++row)
        for (int col = 0; col < machine.n(); ++col) {
            if (machine.A.is_zero(row, col)) continue;
            const RationalSeries& e = machine.A.at(row, col);
            entries.push_back({{"row", row},
                               {"col", col},
                               {"num", e.num().to_string()},
                               {"den", e.den().to_string()}});
        }
    j["entries"] = entries;
    auto carries = nlohmann::json::array();
    for (const auto& c : machine.carry_num) carries.push_back(c.to_string());
    j["state"] = {{"m", machine.m.to_hex()}, {"c", carries}};
    return pretty ? j.dump(2) : j.dump();
}

Rlfsm rlfsm_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("kind").get<std::string>() != "rlfsm")
        throw std::invalid_argument("expected kind \"rlfsm\"");
    int n = j.at("n").get<int>();
    RationalMatrix a(n);
    for (const auto& e : j.at("entries"))
        a.set(e.at("row").get<int>(), e.at("col").get<int>(),
              RationalSeries(Gf2Poly::parse(e.at("num").get<std::string>()),
                             Gf2Poly::parse(e.at("den").get<std::string>())));
    Rlfsm machine(std::move(a));
    if (j.contains("state")) {
        const auto& st = j.at("state");
        machine.m = BitVec::from_hex(st.at("m").get<std::string>(), n);
        const auto& carries = st.at("c");
        for (int i = 0; i < n && i < static_cast<int>(carries.size()); ++i) {
            std::string s = carries[i].get<std::string>();
            machine.carry_num[i] = s == "0" ? Gf2Poly::zero() : Gf2Poly::parse(s);
        }
    }
    return machine;
}

WindmillSpec windmill_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("kind").get<std::string>() != "windmill")
        throw std::invalid_argument("expected kind \"windmill\"");
    WindmillSpec spec;
    spec.alpha = Gf2Poly::parse(j.at("alpha").get<std::string>());
    spec.beta = Gf2Poly::parse(j.at("beta").get<std::string>());
    for (const auto& s : j.at("shifts")) spec.shifts.push_back(s.get<int>());
    return spec;
}

std::string windmill_to_json(const WindmillSpec& spec, bool pretty) {
    nlohmann::json j;
    j["kind"] = "windmill";
    j["alpha"] = spec.alpha.to_string();
    j["beta"] = spec.beta.to_string();
    j["shifts"] = spec.shifts;
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace lfsm
