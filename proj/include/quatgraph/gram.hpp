#pragma once

#include <vector>

#include "quatgraph/intmat.hpp"

namespace quatgraph {

// Quadratic form Q(y) = scale * (y M y^T) with M integer symmetric.
// Houses the norm form of a lattice after clearing denominators.
struct GramForm {
    int dim = 0;
    IntMat mat;     // dim x dim, symmetric
    Rat scale = 1;

    // Clears denominators of a rational symmetric Gram matrix.
    static GramForm from_rational(const std::vector<Rat>& entries, int dim);

    Rat value(const std::vector<Int>& y) const;
    bool is_positive_definite() const;
};

// All y in Z^dim with Q(y) == target, one representative per +- pair
// (first nonzero coordinate positive), plus the zero vector when target
// is 0. Deterministic lexicographic order. Throws precondition_error if
// the form is not positive definite.
std::vector<std::vector<Int>> short_vectors(const GramForm& g, const Int& target);

// All y in Z^dim with Q(y + shift) == target; no sign normalization.
std::vector<std::vector<Int>> short_vectors_shifted(const GramForm& g,
                                                    const std::vector<Rat>& shift,
                                                    const Rat& target);

}  // namespace quatgraph
