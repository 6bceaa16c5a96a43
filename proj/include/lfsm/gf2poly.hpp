#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfsm {

// Polynomial over F2, packed bit-per-coefficient: bit i is the coefficient
// of X^i. The zero polynomial has degree kNegInfDeg.
class Gf2Poly {
public:
    static constexpr int kNegInfDeg = std::numeric_limits<int>::min();

    Gf2Poly() = default;

    // Polynomial from the low bits of a word (bit i -> coefficient of X^i).
    static Gf2Poly from_bits(std::uint64_t bits);
    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return from_bits(1); }
    static Gf2Poly x() { return from_bits(2); }
    static Gf2Poly monomial(int exponent);

    // "x^8+x^6+x^5+x^3+1" (terms in any order) or hex "0x169".
    static Gf2Poly parse(const std::string& text);

    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(int i) const;
    void set_coeff(int i, bool value);
    bool constant_term() const { return coeff(0); }
    int weight() const;  // number of nonzero coefficients

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly& operator+=(const Gf2Poly& o);
    bool operator==(const Gf2Poly& o) const { return words_ == o.words_; }
    bool operator!=(const Gf2Poly& o) const { return words_ != o.words_; }
    bool operator<(const Gf2Poly& o) const;  // for ordered containers

    Gf2Poly shifted(int k) const;            // multiply by X^k (k >= 0)
    Gf2Poly shifted_down(int k) const;       // divide by X^k, dropping low terms
    Gf2Poly truncated(int count) const;      // keep coefficients of X^0..X^{count-1}

    // Quotient/remainder by a nonzero divisor; throws on zero divisor.
    std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& divisor) const;
    Gf2Poly operator%(const Gf2Poly& divisor) const { return divmod(divisor).second; }
    Gf2Poly operator/(const Gf2Poly& divisor) const { return divmod(divisor).first; }
    bool divides(const Gf2Poly& multiple) const;

    Gf2Poly square() const { return *this * *this; }

    std::string to_string() const;  // monomial sum form
    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

// Reduced fraction num/den of polynomials with den(0) = 1, an element of
// the ring of rational power series.
class RationalSeries {
public:
    RationalSeries() : num_(Gf2Poly::zero()), den_(Gf2Poly::one()) {}
    RationalSeries(Gf2Poly num, Gf2Poly den);

    static RationalSeries from_poly(Gf2Poly p) { return RationalSeries(std::move(p), Gf2Poly::one()); }

    const Gf2Poly& num() const { return num_; }
    const Gf2Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator*(const Gf2Poly& p) const;
    bool operator==(const RationalSeries& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Gf2Poly num_, den_;
};

using BitSequence = std::vector<std::uint8_t>;

// First `count` coefficients of the power-series expansion of r.
BitSequence series_expand(const RationalSeries& r, int count);
BitSequence series_expand(const Gf2Poly& num, const Gf2Poly& den, int count);

// Berlekamp-Massey: minimal g with g(0) = 1 whose linear recurrence
// annihilates s. Exact when s has linear complexity L and |s| >= 2L.
// The all-zero sequence yields the constant 1.
Gf2Poly min_poly(const BitSequence& s);

}  // namespace lfsm
