#include "lfsm/factors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lfsm {

const FactorTable& FactorTable::builtin() {
    static const FactorTable table = [] {
        FactorTable t;
        auto add = [&t](int n, std::initializer_list<const char*> primes) {
            std::vector<mpz_class> v;
            for (const char* p : primes) v.emplace_back(p);
            t.add(n, std::move(v));
        };
        add(2, {"3"});
        add(3, {"7"});
        add(4, {"3", "5"});
        add(5, {"31"});
        add(6, {"3", "3", "7"});
        add(7, {"127"});
        add(8, {"3", "5", "17"});
        add(9, {"7", "73"});
        add(10, {"3", "11", "31"});
        add(11, {"23", "89"});
        add(12, {"3", "3", "5", "7", "13"});
        add(13, {"8191"});
        add(14, {"3", "43", "127"});
        add(15, {"7", "31", "151"});
        add(16, {"3", "5", "17", "257"});
        add(17, {"131071"});
        add(18, {"3", "3", "3", "7", "19", "73"});
        add(19, {"524287"});
        add(20, {"3", "5", "5", "11", "31", "41"});
        add(21, {"7", "7", "127", "337"});
        add(22, {"3", "23", "89", "683"});
        add(23, {"47", "178481"});
        add(24, {"3", "3", "5", "7", "13", "17", "241"});
        add(32, {"3", "5", "17", "257", "65537"});
        add(40, {"3", "5", "5", "11", "17", "31", "41", "61681"});
        add(64, {"3", "5", "17", "257", "641", "65537", "6700417"});
        add(128, {"3", "5", "17", "257", "641", "65537", "274177", "6700417",
                  "67280421310721"});
        return t;
    }();
    return table;
}

FactorTable FactorTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open factor file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

FactorTable FactorTable::parse_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw std::runtime_error("factor file must be a JSON object");
    FactorTable t;
    for (auto& [key, value] : j.items()) {
        int n = std::stoi(key);
        std::vector<mpz_class> primes;
        for (auto& p : value) primes.emplace_back(p.get<std::string>());
        t.add(n, std::move(primes));
    }
    return t;
}

void FactorTable::add(int n, std::vector<mpz_class> primes) {
    std::sort(primes.begin(), primes.end());
    mpz_class product = 1;
    for (const auto& p : primes) product *= p;
    mpz_class expect = (mpz_class(1) << n) - 1;
    if (product != expect)
        throw std::runtime_error("factor list for degree " + std::to_string(n) +
                                 " does not multiply to 2^n-1");
    factors_[n] = std::move(primes);
}

const std::vector<mpz_class>& FactorTable::factors(int n) const {
    auto it = factors_.find(n);
    if (it == factors_.end())
        throw std::runtime_error("factorization required for degree " + std::to_string(n));
    return it->second;
}

std::vector<mpz_class> FactorTable::distinct_primes(int n) const {
    std::vector<mpz_class> out;
    for (const auto& p : factors(n))
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

std::vector<int> FactorTable::degrees() const {
    std::vector<int> out;
    for (const auto& [n, _] : factors_) out.push_back(n);
    return out;
}

Gf2Poly x_pow_mod(const mpz_class& e, const Gf2Poly& g) {
    if (!g.constant_term()) throw std::invalid_argument("X divides g");
    if (g.is_one()) return Gf2Poly::zero();
    Gf2Poly result = Gf2Poly::one();
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        result = result.square() % g;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result.shifted(1) % g;
    }
    return result;
}

bool is_irreducible(const Gf2Poly& g) {
    int n = g.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!g.constant_term()) return false;  // divisible by X
    // Rabin: X^(2^n) = X mod g and gcd(X^(2^(n/p)) - X, g) = 1 for p | n.
    std::vector<int> prime_divs;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            prime_divs.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) prime_divs.push_back(m);

    Gf2Poly x = Gf2Poly::x() % g;
    Gf2Poly h = x;  // X^(2^k) mod g, k = 0
    int k = 0;
    // Collect the checkpoints k = n/p in increasing order, then k = n.
    std::vector<int> checkpoints;
    for (int i = static_cast<int>(prime_divs.size()); i-- > 0;)
        checkpoints.push_back(n / prime_divs[i]);
    std::sort(checkpoints.begin(), checkpoints.end());
    for (int cp : checkpoints) {
        while (k < cp) {
            h = h.square() % g;
            ++k;
        }
        if (!gcd(h + x, g).is_one()) return false;
    }
    while (k < n) {
        h = h.square() % g;
        ++k;
    }
    return h == x;
}

mpz_class x_order(const Gf2Poly& g, const FactorTable& factors) {
    if (!g.constant_term()) throw std::invalid_argument("X divides g");
    int n = g.degree();
    if (n == 0) return 1;  // g = 1: trivial quotient ring
    if (is_irreducible(g) && factors.has(n)) {
        mpz_class e = (mpz_class(1) << n) - 1;
        for (const auto& p : factors.distinct_primes(n)) {
            while (mpz_divisible_p(e.get_mpz_t(), p.get_mpz_t()) &&
                   x_pow_mod(e / p, g).is_one())
                e /= p;
        }
        return e;
    }
    if (n > 20)
        throw std::runtime_error("factorization required for degree " + std::to_string(n));
    // Exhaustive multiplication by X; the order of a unit mod g is < 2^n.
    Gf2Poly h = Gf2Poly::x() % g;
    mpz_class limit = mpz_class(1) << n;
    for (mpz_class e = 1; e <= limit; ++e) {
        if (h.is_one()) return e;
        h = h.shifted(1) % g;
    }
    throw std::logic_error("x_order: no order found below 2^n");
}

Primitivity is_primitive(const Gf2Poly& g, const FactorTable& factors) {
    if (!g.constant_term() || g.degree() < 1)
        throw std::invalid_argument("is_primitive requires g(0) = 1 and deg >= 1");
    int n = g.degree();
    if (!is_irreducible(g)) return Primitivity::reducible;
    if (n == 1) return Primitivity::primitive;  // g = 1 + X
    if (!factors.has(n)) return Primitivity::irreducible_unknown_order;
    mpz_class order = (mpz_class(1) << n) - 1;
    for (const auto& p : factors.distinct_primes(n))
        if (x_pow_mod(order / p, g).is_one()) return Primitivity::reducible;
    return Primitivity::primitive;
}

std::string to_string(Primitivity p) {
    switch (p) {
        case Primitivity::primitive: return "primitive";
        case Primitivity::irreducible_unknown_order: return "irreducible_unknown_order";
        case Primitivity::reducible: return "reducible";
    }
    return "?";
}

mpz_class phi_two_pow_minus_one(int n, const FactorTable& factors) {
    mpz_class phi = 1;
    mpz_class last = 0;
    for (const auto& p : factors.factors(n)) {
        phi *= (p == last) ? p : p - 1;
        last = p;
    }
    return phi;
}

}  // namespace lfsm
