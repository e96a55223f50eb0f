#pragma once

#include <vector>

#include "quatgraph/rational.hpp"

namespace quatgraph {

// Dense matrix of arbitrary-precision integers. Everything in this project
// is rank <= 4, so dimensions stay at most 8 in all uses (stacks of two
// bases, kernel computations).
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[r * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[r * cols_ + c]; }

    IntMat stacked(const IntMat& below) const;
    IntMat mul(const IntMat& rhs) const;
    IntMat transposed() const;
    IntMat row(int r) const;

    // Bareiss fraction-free determinant; square matrices only.
    Int det() const;

    bool operator==(const IntMat& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct HnfResult {
    IntMat h;  // rank x cols, echelon, positive pivots, reduced above
    int rank;
};

struct HnfTransformResult {
    IntMat h;       // rank x cols
    IntMat u;       // rows x rows unimodular with u * input = [h; 0]
    int rank;
};

HnfResult hnf_rows(const IntMat& m);
HnfTransformResult hnf_with_transform(const IntMat& m);

// Canonical HNF basis of a full-rank row span; the spec-level operation.
// Throws precondition_error when the rows do not span a finite-index
// sublattice of Z^cols.
IntMat hnf(const IntMat& m);

// Basis (rows) of { y in Z^n : y*k = 0 mod d }, for k an n x m matrix.
IntMat kernel_mod(const IntMat& k, const Int& d);

// Intersection of two full-rank row lattices given by n x n bases.
IntMat lattice_intersect(const IntMat& a, const IntMat& b);

}  // namespace quatgraph
