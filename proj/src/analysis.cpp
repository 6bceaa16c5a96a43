#include "lfsm/analysis.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace lfsm {

DiffusionReport diffusion_delay(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    int n = a.rows();
    // adjacency[j] = successors of j (cells fed by j) = nonzero rows of column j,
    // i.e. edge j -> i iff a_{i,j}.
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j)) succ[j].push_back(i);

    DiffusionReport report;
    report.eccentricities.assign(n, -1);
    report.strongly_connected = true;
    int diameter = 0;
    std::vector<int> dist(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : succ[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        int ecc = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                if (report.strongly_connected) {
                    report.strongly_connected = false;
                    report.unreachable_pair = {src, v};
                }
                ecc = -1;
                break;
            }
            ecc = std::max(ecc, dist[v]);
        }
        report.eccentricities[src] = ecc;
        diameter = std::max(diameter, ecc);
    }
    if (report.strongly_connected) report.delay = diameter;
    return report;
}

namespace {

int detect_period(const BitSequence& s) {
    int len = static_cast<int>(s.size());
    for (int p = 1; p < len; ++p) {
        bool ok = true;
        for (int i = p; i < len && ok; ++i) ok = s[i] == s[i % p];
        if (ok) return p;
    }
    return len;
}

}  // namespace

SequenceStats sequence_stats(const BitSequence& s, std::optional<int> declared_period) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
    SequenceStats st;
    if (declared_period) {
        if (*declared_period < 1 || static_cast<std::size_t>(*declared_period) > s.size())
            throw std::invalid_argument("declared period exceeds sequence length");
        st.period = *declared_period;
    } else {
        st.period = detect_period(s);
    }
    int p = st.period;
    for (int i = 0; i < p; ++i) (s[i] ? st.ones : st.zeros)++;

    // Cyclic runs over one period.
    bool constant = true;
    for (int i = 1; i < p && constant; ++i) constant = s[i] == s[0];
    if (constant) {
        st.run_histogram[s[0] ? 1 : 0][p] = 1;
    } else {
        int start = 0;  // first index beginning a run
        while (s[(start + p - 1) % p] == s[start]) ++start;
        int i = start, covered = 0;
        while (covered < p) {
            int len = 1;
            while (len < p && s[(i + len) % p] == s[i % p]) ++len;
            st.run_histogram[s[i % p] ? 1 : 0][len]++;
            i += len;
            covered += len;
        }
    }

    if (p <= SequenceStats::kAutocorrLimit) {
        st.autocorrelation.resize(p);
        for (int tau = 0; tau < p; ++tau) {
            long long c = 0;
            for (int i = 0; i < p; ++i)
                c += (s[(i + tau) % p] == s[i]) ? 1 : -1;
            st.autocorrelation[tau] = c;
        }
    }
    return st;
}

long long cross_correlation(const BitSequence& a, int period_a,
                            const BitSequence& b, int period_b, long long tau) {
    if (period_a < 1 || period_b < 1 ||
        static_cast<std::size_t>(period_a) > a.size() ||
        static_cast<std::size_t>(period_b) > b.size())
        throw std::invalid_argument("invalid periods");
    long long n = std::lcm<long long>(period_a, period_b);
    long long c = 0;
    for (long long i = 0; i < n; ++i)
        c += (a[(i + tau) % period_a] == b[i % period_b]) ? 1 : -1;
    return c;
}

mpq_class correlation(const BitSequence& a, const BitSequence& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("sequences must have equal nonzero length");
    long long agree = 0, disagree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) (a[i] == b[i] ? agree : disagree)++;
    mpq_class r(mpz_class(static_cast<long>(agree - disagree)),
                mpz_class(static_cast<unsigned long>(a.size())));
    r.canonicalize();
    return r;
}

std::vector<mpq_class> avalanche_correlation(const Lfsm& machine, int bit, int horizon) {
    machine.validate();
    if (machine.k() != 0) throw std::invalid_argument("autonomous machine required");
    int n = machine.n();
    if (bit < 0 || bit >= n) throw std::invalid_argument("bit index out of range");
    std::vector<mpq_class> profile;
    profile.reserve(horizon + 1);
    BitVec diff = BitVec::unit(n, bit);
    for (int t = 0; t <= horizon; ++t) {
        mpq_class v(n - 2 * diff.weight(), n);
        v.canonicalize();
        profile.push_back(v);
        diff = machine.A * diff;
    }
    return profile;
}

}  // namespace lfsm
