#pragma once

#include "quatgraph/order.hpp"

namespace quatgraph {

// Full lattice together with its left and right orders and reduced norm
// (the positive generator of the fractional ideal of element norms).
struct QuatIdeal {
    QuatLattice lattice;
    QuatOrder left;
    QuatOrder right;
    Rat reduced_norm;
};

QuatOrder left_order(const QuatLattice& lat);
QuatOrder right_order(const QuatLattice& lat);
Rat ideal_norm(const QuatLattice& lat);
QuatIdeal make_ideal(const QuatLattice& lat);

// Lattice product d1 * d2: left order d1, right order d2.
QuatIdeal connecting_ideal(const QuatOrder& d1, const QuatOrder& d2);

// The p+1 left ideals of reduced norm p of an order maximal at an
// unramified prime p, in the fixed projective-line order.
std::vector<QuatIdeal> left_ideals_norm_p(const QuatOrder& d, const Int& p);

// Generator x with left * x = lat (after primitive integral scaling of
// lat), if one exists. Verified by exact lattice equality.
std::optional<QuatElement> principal_generator(const QuatOrder& left, const QuatLattice& lat);
std::optional<QuatElement> is_principal(const QuatIdeal& ideal);

// Intersection of a maximal order with one q-neighbor per prime q | level;
// level odd, squarefree, coprime to the discriminant.
QuatOrder eichler_order(const QuatOrder& d, const Int& level);

struct MaximalSuperorderCount {
    bool finite = true;
    Int count = 1;
};

// Number of maximal orders containing o (product of local counts); defined
// with the classifying-graph containment machinery.
MaximalSuperorderCount count_maximal_superorders(const QuatOrder& o);

}  // namespace quatgraph
