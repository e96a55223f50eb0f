#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "quatgraph/error.hpp"

namespace quatgraph {

// All arithmetic in this library is exact. Int/Rat are the only numeric
// types; mpq_class keeps fractions reduced with a positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Largest s >= 0 with s*s <= n. Requires n >= 0.
inline Int isqrt(const Int& n) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

// floor(sqrt(r)) for a nonnegative rational r, computed exactly.
inline Int floor_sqrt(const Rat& r) {
    if (r < 0) throw internal_error("floor_sqrt of negative rational");
    Int num = r.get_num(), den = r.get_den();
    Int s = isqrt(num / den);
    while (s * s * den > num) --s;
    while ((s + 1) * (s + 1) * den <= num) ++s;
    return s;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int v_adic(Int x, const Int& p) {
    if (x == 0) throw internal_error("valuation of zero");
    Int v = 0;
    while (mod_floor(x, p) == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline Int v_adic(const Rat& x, const Int& p) {
    return v_adic(Int(x.get_num()), p) - v_adic(Int(x.get_den()), p);
}

// gcd of fractions: generator of the Z-module they span.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Int d = lcm(a.get_den(), b.get_den());
    Int na = Int(a.get_num() * (d / a.get_den()));
    Int nb = Int(b.get_num() * (d / b.get_den()));
    Rat g(gcd(na, nb), d);
    g.canonicalize();
    return g;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Prime factorization by trial division; inputs in this library stay small.
std::vector<Int> prime_factors(Int n);

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace quatgraph
