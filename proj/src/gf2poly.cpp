#include "lfsm/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace lfsm {

namespace {
constexpr int kWordBits = 64;
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
    Gf2Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
}

Gf2Poly Gf2Poly::monomial(int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Gf2Poly p;
    p.words_.assign(exponent / kWordBits + 1, 0);
    p.words_.back() = 1ull << (exponent % kWordBits);
    return p;
}

int Gf2Poly::degree() const {
    if (words_.empty()) return kNegInfDeg;
    int top = kWordBits - 1 - std::countl_zero(words_.back());
    return static_cast<int>(words_.size() - 1) * kWordBits + top;
}

bool Gf2Poly::coeff(int i) const {
    if (i < 0) return false;
    std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1;
}

void Gf2Poly::set_coeff(int i, bool value) {
    if (i < 0) throw std::invalid_argument("negative exponent");
    std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    std::uint64_t mask = 1ull << (i % kWordBits);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

int Gf2Poly::weight() const {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    r += o;
    return r;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Gf2Poly r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t a = words_[i];
        while (a) {
            int b = std::countr_zero(a);
            a &= a - 1;
            // xor o shifted by i*64+b into r
            int shift = b;
            for (std::size_t j = 0; j < o.words_.size(); ++j) {
                r.words_[i + j] ^= o.words_[j] << shift;
                if (shift) r.words_[i + j + 1] ^= o.words_[j] >> (kWordBits - shift);
            }
        }
    }
    r.trim();
    return r;
}

bool Gf2Poly::operator<(const Gf2Poly& o) const {
    if (words_.size() != o.words_.size()) return words_.size() < o.words_.size();
    return std::lexicographical_compare(words_.rbegin(), words_.rend(),
                                        o.words_.rbegin(), o.words_.rend());
}

Gf2Poly Gf2Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero() || k == 0) return *this;
    Gf2Poly r;
    int wshift = k / kWordBits, bshift = k % kWordBits;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t j = 0; j < words_.size(); ++j) {
        r.words_[j + wshift] ^= words_[j] << bshift;
        if (bshift) r.words_[j + wshift + 1] ^= words_[j] >> (kWordBits - bshift);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::shifted_down(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    Gf2Poly r;
    int wshift = k / kWordBits, bshift = k % kWordBits;
    if (static_cast<std::size_t>(wshift) >= words_.size()) return r;
    r.words_.assign(words_.size() - wshift, 0);
    for (std::size_t j = 0; j < r.words_.size(); ++j) {
        r.words_[j] = words_[j + wshift] >> bshift;
        if (bshift && j + wshift + 1 < words_.size())
            r.words_[j] |= words_[j + wshift + 1] << (kWordBits - bshift);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::truncated(int count) const {
    if (count <= 0) return {};
    Gf2Poly r = *this;
    std::size_t nwords = (static_cast<std::size_t>(count) + kWordBits - 1) / kWordBits;
    if (r.words_.size() > nwords) r.words_.resize(nwords);
    if (count % kWordBits && !r.words_.empty() && r.words_.size() == nwords)
        r.words_.back() &= (1ull << (count % kWordBits)) - 1;
    r.trim();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("zero divisor");
    Gf2Poly q, r = *this;
    int dd = divisor.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        int shift = r.degree() - dd;
        q.set_coeff(shift, true);
        r += divisor.shifted(shift);
    }
    return {q, r};
}

bool Gf2Poly::divides(const Gf2Poly& multiple) const {
    return (multiple % *this).is_zero();
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly Gf2Poly::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        Gf2Poly p;
        std::size_t digits = s.size() - 2;
        if (digits == 0) throw std::invalid_argument("empty hex polynomial");
        p.words_.assign((digits * 4 + kWordBits - 1) / kWordBits, 0);
        int bit = 0;
        for (std::size_t i = s.size(); i > 2; --i, bit += 4) {
            char c = s[i - 1];
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else throw std::invalid_argument("bad hex digit in polynomial");
            p.words_[bit / kWordBits] |= static_cast<std::uint64_t>(v) << (bit % kWordBits);
        }
        p.trim();
        return p;
    }
    Gf2Poly p;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string term = s.substr(i, j - i);
        int e;
        if (term == "1")
            e = 0;
        else if (term == "x" || term == "X")
            e = 1;
        else if ((term[0] == 'x' || term[0] == 'X') && term.size() > 2 && term[1] == '^')
            e = std::stoi(term.substr(2));
        else
            throw std::invalid_argument("bad polynomial term: " + term);
        p.set_coeff(e, !p.coeff(e));  // repeated terms cancel, characteristic 2
        i = j + 1;
    }
    return p;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        if (!coeff(e)) continue;
        if (!first) os << "+";
        if (e == 0)
            os << "1";
        else if (e == 1)
            os << "x";
        else
            os << "x^" << e;
        first = false;
    }
    return os.str();
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0x0";
    std::ostringstream os;
    os << std::hex;
    os << "0x" << words_.back();
    for (std::size_t i = words_.size() - 1; i-- > 0;) {
        os.width(16);
        os.fill('0');
        os << words_[i];
    }
    return os.str();
}

RationalSeries::RationalSeries(Gf2Poly num, Gf2Poly den) {
    if (den.is_zero() || !den.constant_term())
        throw std::invalid_argument("denominator must have nonzero constant term");
    Gf2Poly g = gcd(num, den);
    if (!g.is_zero() && !g.is_one()) {
        num = num / g;
        den = den / g;
    }
    num_ = std::move(num);
    den_ = std::move(den);
    if (num_.is_zero()) den_ = Gf2Poly::one();
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    return RationalSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    return RationalSeries(num_ * o.num_, den_ * o.den_);
}

RationalSeries RationalSeries::operator*(const Gf2Poly& p) const {
    return RationalSeries(num_ * p, den_);
}

std::string RationalSeries::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BitSequence series_expand(const Gf2Poly& num, const Gf2Poly& den, int count) {
    if (den.is_zero() || !den.constant_term())
        throw std::invalid_argument("denominator must have nonzero constant term");
    if (count < 0) throw std::invalid_argument("negative count");
    BitSequence out;
    out.reserve(count);
    Gf2Poly rem = num;
    for (int i = 0; i < count; ++i) {
        bool bit = rem.constant_term();
        out.push_back(bit);
        if (bit) rem += den;
        rem = rem.shifted_down(1);
    }
    return out;
}

BitSequence series_expand(const RationalSeries& r, int count) {
    return series_expand(r.num(), r.den(), count);
}

Gf2Poly min_poly(const BitSequence& s) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
    // Berlekamp-Massey over F2. c is the current connection polynomial,
    // b the one before the last length change at position m.
    Gf2Poly c = Gf2Poly::one(), b = Gf2Poly::one();
    int L = 0, m = -1;
    for (int n = 0; n < static_cast<int>(s.size()); ++n) {
        int d = s[n] & 1;
        for (int i = 1; i <= L; ++i)
            if (c.coeff(i)) d ^= s[n - i] & 1;
        if (!d) continue;
        Gf2Poly t = c;
        c += b.shifted(n - m);
        if (2 * L <= n) {
            L = n + 1 - L;
            b = std::move(t);
            m = n;
        }
    }
    return c;
}

}  // namespace lfsm
