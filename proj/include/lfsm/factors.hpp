#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfsm/gf2poly.hpp"

namespace lfsm {

// Prime factorizations of 2^n - 1, keyed by n. Needed to certify
// primitivity; Mersenne-style factorizations are standard published data.
class FactorTable {
public:
    // Factorizations for n in {2..24, 32, 40, 64, 128}.
    static const FactorTable& builtin();

    // JSON file mapping degree -> array of decimal prime strings
    // (repeated entries encode multiplicity).
    static FactorTable load(const std::string& path);
    static FactorTable parse_json(const std::string& json_text);

    bool has(int n) const { return factors_.count(n) != 0; }
    // Prime factors of 2^n - 1 with multiplicity; throws if absent.
    const std::vector<mpz_class>& factors(int n) const;
    std::vector<mpz_class> distinct_primes(int n) const;

    void add(int n, std::vector<mpz_class> primes);
    std::vector<int> degrees() const;

private:
    std::map<int, std::vector<mpz_class>> factors_;
};

// X^e mod g, e an arbitrary-precision exponent; g(0) must be 1.
Gf2Poly x_pow_mod(const mpz_class& e, const Gf2Poly& g);

bool is_irreducible(const Gf2Poly& g);

// Smallest e > 0 with X^e = 1 mod g. Requires g(0) = 1. For irreducible g
// the order is found by stripping primes from 2^deg(g)-1; otherwise an
// exhaustive search bounded by 2^deg(g) is used, permitted only for
// deg(g) <= 20.
mpz_class x_order(const Gf2Poly& g, const FactorTable& factors);

enum class Primitivity { primitive, irreducible_unknown_order, reducible };

// Primitive iff irreducible and X has order 2^n - 1 mod g; degrades to
// irreducible_unknown_order when the factorization of 2^n - 1 is missing.
Primitivity is_primitive(const Gf2Poly& g, const FactorTable& factors);

std::string to_string(Primitivity p);

// Euler phi of 2^n - 1 from its factorization.
mpz_class phi_two_pow_minus_one(int n, const FactorTable& factors);

}  // namespace lfsm
