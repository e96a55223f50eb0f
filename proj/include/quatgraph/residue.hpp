#pragma once

#include "quatgraph/order.hpp"

namespace quatgraph {

// 2x2 matrix over F_p.
struct Mat2 {
    unsigned long a = 0, b = 0, c = 0, d = 0;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y, unsigned long p);

// Ring isomorphism O/pO = M_2(F_p) at an unramified prime where O is
// maximal, given by the images of the order basis.
struct ResidueSplitting {
    Int p;
    unsigned long pl;
    QuatLattice order_lattice;
    std::array<Mat2, 4> basis_images{};
    std::array<unsigned long, 4> idempotent_coords{};  // the e found by search

    ResidueSplitting(Int prime, unsigned long prime_l, QuatLattice lat)
        : p(std::move(prime)), pl(prime_l), order_lattice(std::move(lat)) {}

    Mat2 image(const QuatElement& x) const;
};

ResidueSplitting split_residue(const QuatOrder& o, const Int& p);

// The p+1 points of the projective line over F_p as normalized column
// vectors, ordered lexicographically: (0,1), (1,0), (1,1), ..., (1,p-1).
std::vector<std::pair<unsigned long, unsigned long>> projective_line(unsigned long p);

// Index of the line containing m * w, for an invertible residue m.
int line_image(const Mat2& m, int line_index, unsigned long p);

}  // namespace quatgraph
