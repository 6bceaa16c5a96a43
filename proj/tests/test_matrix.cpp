#include "doctest.h"
#include "lfsm/matrix.hpp"

#include <random>

using namespace lfsm;

namespace {

Gf2Poly P(const std::string& s) { return Gf2Poly::parse(s); }

BitMatrix t2_matrix() {
    BitMatrix a(8, 8);
    for (int i = 0; i < 7; ++i) a.set(i, i + 1, true);
    a.set(7, 0, true);
    a.set(3, 7, true);
    a.set(7, 2, true);
    return a;
}

BitMatrix random_matrix(std::mt19937& rng, int n) {
    BitMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, rng() & 1);
    return a;
}

}  // namespace

TEST_CASE("bitvec hex and weight") {
    BitVec v = BitVec::from_hex("0x5a", 8);
    CHECK(v.to_hex() == "0x5a");
    CHECK(v.weight() == 4);
    CHECK(BitVec::unit(8, 3).to_hex() == "0x08");
    CHECK((v ^ v).is_zero());
    CHECK_THROWS_AS(BitVec::from_hex("0x1ff", 8), std::invalid_argument);
}

TEST_CASE("rank, inverse and solve") {
    BitMatrix a = t2_matrix();
    CHECK(a.rank() == 8);
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK((*inv * a) == BitMatrix::identity(8));
    BitVec rhs = BitVec::from_hex("0x5a", 8);
    auto x = solve(a, rhs);
    REQUIRE(x);
    CHECK((a * *x) == rhs);

    BitMatrix sing(3, 3);
    sing.set(0, 0, true);
    sing.set(1, 0, true);
    CHECK(sing.rank() == 1);
    CHECK(!sing.inverse());
    BitVec bad(3);
    bad.set(0, true);
    bad.set(1, false);
    bad.set(2, true);
    CHECK(!solve(sing, bad));
}

TEST_CASE("coords round trip and xor_block") {
    BitMatrix a = t2_matrix();
    auto coords = a.coords();
    CHECK(coords.size() == 10);
    CHECK(BitMatrix::from_coords(8, 8, coords) == a);

    BitMatrix big(6, 6);
    BitMatrix blk(2, 2);
    blk.set(0, 1, true);
    blk.set(1, 0, true);
    big.xor_block(2, 3, blk);
    CHECK(big.get(2, 4));
    CHECK(big.get(3, 3));
    CHECK(big.weight() == 2);
}

TEST_CASE("connection polynomial of fixtures") {
    CHECK(connection_polynomial(t2_matrix()) == P("x^8+x^6+x^5+x^3+1"));
    CHECK(connection_polynomial(BitMatrix::identity(3)) == P("1+x+x^2+x^3"));
    // pure 8-cycle
    BitMatrix c(8, 8);
    for (int i = 0; i < 8; ++i) c.set(i, (i + 1) % 8, true);
    CHECK(connection_polynomial(c) == P("x^8+1"));
    // char poly is the reversal
    CHECK(char_poly(t2_matrix()) == P("x^8+x^5+x^3+x^2+1"));
}

TEST_CASE("char_poly agrees with cofactor-expansion determinant") {
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        BitMatrix a = random_matrix(rng, n);
        CHECK(connection_polynomial(a) == PolyMatrix::i_minus_xa(a).det_expansion());
    }
}

TEST_CASE("adjunct identity adj(M) * M = det(M) I") {
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        BitMatrix a = random_matrix(rng, n);
        Gf2Poly q = connection_polynomial(a);
        PolyMatrix prod = adjunct_ixa(a) * PolyMatrix::i_minus_xa(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == (i == j ? q : Gf2Poly::zero()));
    }
}

TEST_CASE("rank-1 determinant update vs recomputation") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        BitMatrix a = random_matrix(rng, n);
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        BitMatrix a2 = a;
        a2.set(i, j, !a2.get(i, j));
        // flipping A_{i,j} adds X at (i,j) of I - XA
        Gf2Poly via_update = det_rank1_update(PolyMatrix::i_minus_xa(a), i, j, Gf2Poly::x());
        CHECK(via_update == PolyMatrix::i_minus_xa(a2).det_expansion());
    }
}
