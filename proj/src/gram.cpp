#include "quatgraph/gram.hpp"

#include <algorithm>

namespace quatgraph {

GramForm GramForm::from_rational(const std::vector<Rat>& entries, int dim) {
    if (static_cast<int>(entries.size()) != dim * dim)
        throw internal_error("GramForm: entry count mismatch");
    Int den = 1;
    for (const Rat& e : entries) den = lcm(den, e.get_den());
    GramForm g;
    g.dim = dim;
    g.mat = IntMat(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat scaled = entries[i * dim + j] * den;
            g.mat.at(i, j) = scaled.get_num();
            if (g.mat.at(i, j) != g.mat.at(j, i) && j < i)
                throw internal_error("GramForm: not symmetric");
        }
    g.scale = Rat(1, den);
    g.scale.canonicalize();
    return g;
}

Rat GramForm::value(const std::vector<Int>& y) const {
    Int acc = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) acc += y[i] * mat.at(i, j) * y[j];
    return scale * acc;
}

bool GramForm::is_positive_definite() const {
    if (scale <= 0) return false;
    for (int k = 1; k <= dim; ++k) {
        IntMat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = mat.at(i, j);
        if (minor.det() <= 0) return false;
    }
    return true;
}

namespace {

struct Cholesky {
    int n;
    std::vector<Rat> d;  // diagonal weights
    std::vector<Rat> u;  // strict upper part, row-major
    Rat& up(int i, int j) { return u[i * n + j]; }
};

// Exact rational decomposition Q(y) = sum_i d_i (y_i + sum_{j>i} u_ij y_j)^2.
Cholesky decompose(const GramForm& g) {
    int n = g.dim;
    std::vector<Rat> q(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i * n + j] = Rat(g.mat.at(i, j)) * g.scale;
    Cholesky c{n, std::vector<Rat>(n), std::vector<Rat>(n * n)};
    for (int i = 0; i < n; ++i) {
        c.d[i] = q[i * n + i];
        if (c.d[i] <= 0)
            throw precondition_error("short_vectors: form is not positive definite");
        for (int j = i + 1; j < n; ++j) c.up(i, j) = q[i * n + j] / c.d[i];
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) {
                q[k * n + l] -= c.d[i] * c.up(i, k) * c.up(i, l);
                q[l * n + k] = q[k * n + l];
            }
    }
    return c;
}

// Largest integer k with k <= center + sqrt(budget), all exact.
Int floor_center_plus_root(const Rat& center, const Rat& budget) {
    Int k = floor_rat(center) + floor_sqrt(budget) + 2;
    auto ok = [&](const Int& x) {
        Rat diff = Rat(x) - center;
        if (diff <= 0) return true;
        return diff * diff <= budget;
    };
    while (!ok(k)) --k;
    return k;
}

Int ceil_center_minus_root(const Rat& center, const Rat& budget) {
    Int k = floor_rat(center) - floor_sqrt(budget) - 2;
    auto ok = [&](const Int& x) {
        Rat diff = center - Rat(x);
        if (diff <= 0) return true;
        return diff * diff <= budget;
    };
    while (!ok(k)) ++k;
    return k;
}

void enumerate(const Cholesky& c, const std::vector<Rat>& shift, int level,
               std::vector<Int>& current, const Rat& budget,
               std::vector<std::vector<Int>>& out) {
    if (level < 0) {
        if (budget == 0) out.push_back(current);
        return;
    }
    // Center of the quadratic term at this level given choices above it.
    Rat center = shift[level];
    for (int j = level + 1; j < c.n; ++j)
        center += c.u[level * c.n + j] * (Rat(current[j]) + shift[j]);
    Rat cap = budget / c.d[level];
    Int lo = ceil_center_minus_root(-center, cap);
    Int hi = floor_center_plus_root(-center, cap);
    for (Int x = lo; x <= hi; ++x) {
        Rat term = Rat(x) + center;
        Rat used = c.d[level] * term * term;
        if (used > budget) continue;
        current[level] = x;
        enumerate(c, shift, level - 1, current, budget - used, out);
    }
    current[level] = 0;
}

}  // namespace

std::vector<std::vector<Int>> short_vectors_shifted(const GramForm& g,
                                                    const std::vector<Rat>& shift,
                                                    const Rat& target) {
    if (static_cast<int>(shift.size()) != g.dim)
        throw internal_error("short_vectors_shifted: shift size mismatch");
    if (target < 0) return {};
    Cholesky c = decompose(g);
    std::vector<Int> current(g.dim, Int(0));
    std::vector<std::vector<Int>> out;
    enumerate(c, shift, g.dim - 1, current, target, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> short_vectors(const GramForm& g, const Int& target) {
    if (target < 0) throw precondition_error("short_vectors: negative target");
    std::vector<Rat> zero_shift(g.dim, Rat(0));
    std::vector<std::vector<Int>> all = short_vectors_shifted(g, zero_shift, Rat(target));
    std::vector<std::vector<Int>> out;
    for (auto& v : all) {
        int first_nonzero = -1;
        for (int i = 0; i < g.dim; ++i)
            if (v[i] != 0) { first_nonzero = i; break; }
        if (first_nonzero < 0) {
            out.push_back(v);  // zero vector, target 0 only
        } else if (v[first_nonzero] > 0) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace quatgraph
