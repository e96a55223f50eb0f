#include "quatgraph/symbols.hpp"

namespace quatgraph {

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// Integer representative of the square class of a rational.
Int square_class(const Rat& x) { return Int(x.get_num() * x.get_den()); }

int hilbert_odd(const Int& p, const Int& ta, const Int& tb) {
    Int alpha = v_adic(ta, p), beta = v_adic(tb, p);
    Int u = ta, v = tb;
    for (Int k = 0; k < alpha; ++k) u /= p;
    for (Int k = 0; k < beta; ++k) v /= p;
    alpha = mod_floor(alpha, 2);
    beta = mod_floor(beta, 2);
    int result = 1;
    if (alpha == 1 && beta == 1) result *= kronecker(-1, p);
    if (beta == 1) result *= kronecker(u, p);
    if (alpha == 1) result *= kronecker(v, p);
    return result;
}

// Dyadic case by exhaustive search for a primitive solution of
// a x^2 + b y^2 - z^2 = 0 modulo 32. After reducing the 2-valuations of a
// and b modulo squares to {0,1}, some partial derivative at a primitive
// point has valuation at most 2, so Hensel's bound 2*2+1 = 5 makes the
// modulus 2^5 decisive in both directions.
int hilbert_dyadic(Int ta, Int tb) {
    while (mod_floor(ta, 4) == 0) ta /= 4;
    while (mod_floor(tb, 4) == 0) tb /= 4;
    const long m = 32;
    long a = mpz_class(mod_floor(ta, m)).get_si();
    long b = mpz_class(mod_floor(tb, m)).get_si();
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            for (long z = 0; z < m; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                if ((a * x * x + b * y * y - z * z) % m == 0) return 1;
            }
    return -1;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0)
        throw precondition_error("hilbert_symbol: arguments must be nonzero");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    if (v.prime < 2 || !is_prime(v.prime))
        throw precondition_error("hilbert_symbol: place must be a prime or infinity");
    Int ta = square_class(a), tb = square_class(b);
    if (v.prime == 2) return hilbert_dyadic(ta, tb);
    return hilbert_odd(v.prime, ta, tb);
}

}  // namespace quatgraph
