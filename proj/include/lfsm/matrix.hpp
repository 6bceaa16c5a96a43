#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lfsm/gf2poly.hpp"

namespace lfsm {

// Packed vector over F2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t m = 1ull << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(int i) { words_[i >> 6] ^= 1ull << (i & 63); }
    int weight() const;
    bool is_zero() const;

    BitVec& operator^=(const BitVec& o);
    BitVec operator^(const BitVec& o) const { BitVec r = *this; r ^= o; return r; }
    bool operator==(const BitVec& o) const = default;

    static BitVec unit(int size, int i) { BitVec v(size); v.set(i, true); return v; }
    static BitVec from_hex(const std::string& hex, int size);
    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over F2, packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return rows_data_[i].get(j); }
    void set(int i, int j, bool v) { rows_data_[i].set(j, v); }
    const BitVec& row(int i) const { return rows_data_[i]; }
    BitVec& row(int i) { return rows_data_[i]; }

    int row_weight(int i) const { return rows_data_[i].weight(); }
    int col_weight(int j) const;
    int weight() const;

    BitMatrix operator*(const BitMatrix& o) const;
    BitVec operator*(const BitVec& v) const;
    BitMatrix operator+(const BitMatrix& o) const;
    bool operator==(const BitMatrix& o) const = default;

    BitMatrix transposed() const;
    int rank() const;
    std::optional<BitMatrix> inverse() const;

    // Sparse 0-based coordinate export, row-major order.
    std::vector<std::pair<int, int>> coords() const;
    static BitMatrix from_coords(int rows, int cols,
                                 const std::vector<std::pair<int, int>>& coords);

    // Place `block` with its (0,0) entry at (i0,j0), xor-ing into place.
    void xor_block(int i0, int j0, const BitMatrix& block);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> rows_data_;
};

// Solve M x = rhs over F2; nullopt when inconsistent. M is rows x cols,
// rhs has M.rows() bits, solution has M.cols() bits.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& rhs);

// Characteristic polynomial det(lambda I - A) via Hessenberg reduction.
Gf2Poly char_poly(const BitMatrix& a);

// Connection polynomial Q(X) = det(I - XA), the coefficient reversal of
// the characteristic polynomial (signs vanish over F2).
Gf2Poly connection_polynomial(const BitMatrix& a);

// Square matrix over F2[X].
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
    static PolyMatrix identity(int n);
    // I - XA for a square bit matrix A.
    static PolyMatrix i_minus_xa(const BitMatrix& a);

    int dim() const { return n_; }
    const Gf2Poly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    Gf2Poly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const = default;

    // Exact determinant by cofactor expansion; intended for small n (<= ~9)
    // and as an independent oracle for the char_poly route.
    Gf2Poly det_expansion() const;
    Gf2Poly cofactor(int i, int j) const;

private:
    int n_ = 0;
    std::vector<Gf2Poly> entries_;
};

// adj(I - XA), every entry of degree <= n-1, via the truncated Neumann
// series: adj = Q(X) * sum_{t<n} A^t X^t mod X^n.
PolyMatrix adjunct_ixa(const BitMatrix& a);

// det(A + lambda E_{i,j}) = det(A) + lambda * cof_{i,j}(A).
Gf2Poly det_rank1_update(const PolyMatrix& a, int i, int j, const Gf2Poly& lambda);

}  // namespace lfsm
