#pragma once

#include "quatgraph/rational.hpp"

namespace quatgraph {

// Kronecker symbol (a|n), defined for all integers.
int kronecker(const Int& a, const Int& n);

struct Place {
    bool infinite = false;
    Int prime = 0;

    static Place at_infinity() { return Place{true, 0}; }
    static Place at(const Int& p) { return Place{false, p}; }
};

// Hilbert symbol (a,b) at a place of Q: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion. Depends only on the square
// classes of a and b. Requires a, b nonzero.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

}  // namespace quatgraph
