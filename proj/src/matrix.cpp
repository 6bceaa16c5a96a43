#include "lfsm/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace lfsm {

int BitVec::weight() const {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitVec::is_zero() const {
    for (auto word : words_)
        if (word) return false;
    return true;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVec BitVec::from_hex(const std::string& hex, int size) {
    std::string s = hex;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
    if (s.empty()) throw std::invalid_argument("empty hex string");
    BitVec v(size);
    int bit = 0;
    for (std::size_t i = s.size(); i-- > 0; bit += 4) {
        char c = s[i];
        int val;
        if (c >= '0' && c <= '9') val = c - '0';
        else if (c >= 'a' && c <= 'f') val = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') val = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit");
        for (int b = 0; b < 4; ++b)
            if (val & (1 << b)) {
                if (bit + b >= size)
                    throw std::invalid_argument("hex state wider than vector");
                v.set(bit + b, true);
            }
    }
    return v;
}

std::string BitVec::to_hex() const {
    int digits = (size_ + 3) / 4;
    if (digits == 0) return "0x0";
    std::string s = "0x";
    for (int d = digits; d-- > 0;) {
        int val = 0;
        for (int b = 0; b < 4; ++b) {
            int i = d * 4 + b;
            if (i < size_ && get(i)) val |= 1 << b;
        }
        s.push_back("0123456789abcdef"[val]);
    }
    return s;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), rows_data_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

int BitMatrix::col_weight(int j) const {
    int w = 0;
    for (int i = 0; i < rows_; ++i) w += get(i, j);
    return w;
}

int BitMatrix::weight() const {
    int w = 0;
    for (int i = 0; i < rows_; ++i) w += rows_data_[i].weight();
    return w;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix shape mismatch");
    BitMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k)) r.rows_data_[i] ^= o.rows_data_[k];
    return r;
}

BitVec BitMatrix::operator*(const BitVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("BitMatrix/BitVec shape mismatch");
    BitVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const auto& rw = rows_data_[i].words();
        const auto& vw = v.words();
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        r.set(i, std::popcount(acc) & 1);
    }
    return r;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("BitMatrix shape mismatch");
    BitMatrix r = *this;
    for (int i = 0; i < rows_; ++i) r.rows_data_[i] ^= o.rows_data_[i];
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) r.set(j, i, true);
    return r;
}

int BitMatrix::rank() const {
    std::vector<BitVec> work = rows_data_;
    int r = 0;
    for (int j = 0; j < cols_ && r < rows_; ++j) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (work[i].get(j)) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(work[r], work[pivot]);
        for (int i = 0; i < rows_; ++i)
            if (i != r && work[i].get(j)) work[i] ^= work[r];
        ++r;
    }
    return r;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    BitMatrix work = *this, inv = identity(n);
    for (int j = 0; j < n; ++j) {
        int pivot = -1;
        for (int i = j; i < n; ++i)
            if (work.get(i, j)) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(work.rows_data_[j], work.rows_data_[pivot]);
        std::swap(inv.rows_data_[j], inv.rows_data_[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != j && work.get(i, j)) {
                work.rows_data_[i] ^= work.rows_data_[j];
                inv.rows_data_[i] ^= inv.rows_data_[j];
            }
    }
    return inv;
}

std::vector<std::pair<int, int>> BitMatrix::coords() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) out.emplace_back(i, j);
    return out;
}

BitMatrix BitMatrix::from_coords(int rows, int cols,
                                 const std::vector<std::pair<int, int>>& coords) {
    BitMatrix m(rows, cols);
    for (auto [i, j] : coords) {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw std::invalid_argument("coordinate out of range");
        m.set(i, j, true);
    }
    return m;
}

void BitMatrix::xor_block(int i0, int j0, const BitMatrix& block) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            if (block.get(i, j)) rows_data_[i0 + i].flip(j0 + j);
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("rhs size mismatch");
    int rows = m.rows(), cols = m.cols();
    std::vector<BitVec> work;
    work.reserve(rows);
    for (int i = 0; i < rows; ++i) work.push_back(m.row(i));
    BitVec b = rhs;
    std::vector<int> pivot_col;  // pivot column of reduced row r
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (work[i].get(j)) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(work[r], work[pivot]);
        bool br = b.get(r), bp = b.get(pivot);
        b.set(r, bp);
        b.set(pivot, br);
        for (int i = 0; i < rows; ++i)
            if (i != r && work[i].get(j)) {
                work[i] ^= work[r];
                if (b.get(r)) b.flip(i);
            }
        pivot_col.push_back(j);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b.get(i)) return std::nullopt;
    BitVec x(cols);
    for (int i = 0; i < r; ++i) x.set(pivot_col[i], b.get(i));
    return x;
}

Gf2Poly char_poly(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    int n = a.rows();
    // Unpacked copy: similarity reduction needs column operations too.
    std::vector<std::vector<std::uint8_t>> h(n, std::vector<std::uint8_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = a.get(i, j);

    // Reduce to upper Hessenberg form by similarity transforms: each row
    // operation is compensated by the matching column operation.
    for (int j = 0; j + 2 < n; ++j) {
        int pivot = -1;
        for (int i = j + 1; i < n; ++i)
            if (h[i][j]) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != j + 1) {
            std::swap(h[pivot], h[j + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][j + 1]);
        }
        for (int i = j + 2; i < n; ++i)
            if (h[i][j]) {
                for (int k = 0; k < n; ++k) h[i][k] ^= h[j + 1][k];
                for (int k = 0; k < n; ++k) h[k][j + 1] ^= h[k][i];
            }
    }

    // Leading-principal-minor recurrence for Hessenberg matrices; signs
    // vanish in characteristic 2.
    std::vector<Gf2Poly> p(n + 1);
    p[0] = Gf2Poly::one();
    for (int m = 1; m <= n; ++m) {
        Gf2Poly pm = p[m - 1].shifted(1);
        if (h[m - 1][m - 1]) pm += p[m - 1];
        bool prod = true;
        for (int i = m - 1; i >= 1; --i) {
            prod = prod && h[i][i - 1];
            if (!prod) break;
            if (h[i - 1][m - 1]) pm += p[i - 1];
        }
        p[m] = std::move(pm);
    }
    return p[n];
}

Gf2Poly connection_polynomial(const BitMatrix& a) {
    Gf2Poly cp = char_poly(a);
    int n = a.rows();
    Gf2Poly q;
    for (int i = 0; i <= n; ++i)
        if (cp.coeff(i)) q.set_coeff(n - i, true);
    return q;
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Gf2Poly::one();
    return m;
}

PolyMatrix PolyMatrix::i_minus_xa(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
    int n = a.rows();
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Gf2Poly& e = m.at(i, j);
            if (i == j) e = Gf2Poly::one();
            if (a.get(i, j)) e += Gf2Poly::x();
        }
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PolyMatrix dim mismatch");
    PolyMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < n_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

namespace {

Gf2Poly det_recursive(const PolyMatrix& m, std::vector<int>& live_cols, int row) {
    int n = m.dim();
    if (row == n) return Gf2Poly::one();
    Gf2Poly det;
    for (std::size_t c = 0; c < live_cols.size(); ++c) {
        int col = live_cols[c];
        const Gf2Poly& e = m.at(row, col);
        if (e.is_zero()) continue;
        live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(c));
        det += e * det_recursive(m, live_cols, row + 1);
        live_cols.insert(live_cols.begin() + static_cast<std::ptrdiff_t>(c), col);
    }
    return det;
}

}  // namespace

Gf2Poly PolyMatrix::det_expansion() const {
    std::vector<int> cols(n_);
    for (int j = 0; j < n_; ++j) cols[j] = j;
    return det_recursive(*this, cols, 0);
}

Gf2Poly PolyMatrix::cofactor(int i, int j) const {
    PolyMatrix minor(n_ - 1);
    for (int r = 0, mr = 0; r < n_; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n_; ++c) {
            if (c == j) continue;
            minor.at(mr, mc) = at(r, c);
            ++mc;
        }
        ++mr;
    }
    return minor.det_expansion();  // (-1)^(i+j) is trivial in characteristic 2
}

PolyMatrix adjunct_ixa(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
    int n = a.rows();
    Gf2Poly q = connection_polynomial(a);
    // (I - XA)^(-1) = sum_t A^t X^t; multiplying by Q and truncating mod X^n
    // is exact because every adjunct entry has degree <= n-1.
    PolyMatrix adj(n);
    BitMatrix power = BitMatrix::identity(n);
    Gf2Poly qt = q.truncated(n);
    for (int t = 0; t < n; ++t) {
        Gf2Poly term = qt.shifted(t).truncated(n);
        if (!term.is_zero())
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (power.get(i, j)) adj.at(i, j) += term;
        if (t + 1 < n) power = power * a;
    }
    return adj;
}

Gf2Poly det_rank1_update(const PolyMatrix& a, int i, int j, const Gf2Poly& lambda) {
    return a.det_expansion() + lambda * a.cofactor(i, j);
}

}  // namespace lfsm
