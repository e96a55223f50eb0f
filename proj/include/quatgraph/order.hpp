#pragma once

#include <optional>

#include "quatgraph/gram.hpp"
#include "quatgraph/quatalg.hpp"

namespace quatgraph {

// Full rank-4 lattice in a quaternion algebra. Canonical representation:
// minimal positive denominator and HNF basis, rows holding the coordinates
// of denom * (basis vector) in (1, i, j, ij). Structural equality is
// lattice equality.
class QuatLattice {
public:
    static QuatLattice from_elements(const QuaternionAlgebra& alg,
                                     const std::vector<QuatElement>& gens);
    // Reassembles a serialized lattice; verifies the representation is the
    // canonical one.
    static QuatLattice from_raw(const QuaternionAlgebra& alg, const Int& denom,
                                const IntMat& basis);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const Int& denom() const { return denom_; }
    const IntMat& basis() const { return basis_; }

    QuatElement element(int i) const;
    std::vector<QuatElement> elements() const;

    std::array<Rat, 4> rational_coords(const QuatElement& x) const;
    bool contains(const QuatElement& x) const;

    QuatLattice product(const QuatLattice& rhs) const;
    QuatLattice sum(const QuatLattice& rhs) const;
    QuatLattice intersect(const QuatLattice& rhs) const;
    QuatLattice scaled(const Rat& s) const;
    QuatLattice conjugated_by(const QuatElement& x) const;  // x L x^-1

    // gcd of the rational coordinates of this lattice's basis w.r.t. ref;
    // dividing by it makes the lattice a primitive sublattice of ref.
    Rat coordinate_content(const QuatLattice& ref) const;

    // [ref : this] for sublattices, as a positive rational in general.
    Rat index_in(const QuatLattice& ref) const;

    std::vector<Int> key() const;

    friend bool operator==(const QuatLattice& a, const QuatLattice& b) {
        return a.alg_.same_as(b.alg_) && a.denom_ == b.denom_ && a.basis_ == b.basis_;
    }

private:
    QuatLattice(QuaternionAlgebra alg, Int denom, IntMat basis);

    QuaternionAlgebra alg_;
    Int denom_;
    IntMat basis_;
};

// Reduced norm as a quadratic form in the lattice's basis coordinates.
GramForm norm_gram(const QuatLattice& lat);

// {x : x*b in a} or {x : b*x in a}, a full lattice.
QuatLattice colon_lattice(const QuatLattice& a, const QuatLattice& b, bool multiply_on_left);

class QuatOrder {
public:
    // Verifies 1 is a member and that basis products stay inside.
    explicit QuatOrder(QuatLattice lat);

    const QuatLattice& lattice() const { return lat_; }
    const QuaternionAlgebra& algebra() const { return lat_.algebra(); }
    const Int& reduced_discriminant() const { return disc_; }
    QuatElement element(int i) const { return lat_.element(i); }
    bool contains(const QuatElement& x) const { return lat_.contains(x); }

    friend bool operator==(const QuatOrder& a, const QuatOrder& b) {
        return a.lat_ == b.lat_;
    }

private:
    QuatLattice lat_;
    Int disc_;
};

struct UnitGroup {
    std::vector<QuatElement> elements;  // every unit of reduced norm 1, both signs
    Int order() const { return Int(elements.size()); }
};

QuatOrder standard_order(const QuaternionAlgebra& alg);
QuatOrder order_from_generators(const QuaternionAlgebra& alg,
                                const std::vector<QuatElement>& gens);
Int reduced_discriminant(const QuatOrder& o);
QuatOrder p_maximalize(const QuatOrder& o, const Int& p);
QuatOrder maximal_order(const QuaternionAlgebra& alg);
UnitGroup unit_group(const QuatOrder& o);

// x in O with trd(x) = t and nrd(x) = n, if any; requires t^2 - 4n < 0.
std::optional<QuatElement> embed_quadratic(const QuatOrder& o, const Int& t, const Int& n);

}  // namespace quatgraph
