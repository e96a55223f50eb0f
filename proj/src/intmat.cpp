#include "quatgraph/intmat.hpp"

namespace quatgraph {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::stacked(const IntMat& below) const {
    if (rows_ == 0) return below;
    if (below.rows() == 0) return *this;
    if (cols_ != below.cols()) throw internal_error("stack: column mismatch");
    IntMat m(rows_ + below.rows(), cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows(); ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    if (cols_ != rhs.rows()) throw internal_error("mul: shape mismatch");
    IntMat m(rows_, rhs.cols());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols(); ++j)
                m.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return m;
}

IntMat IntMat::transposed() const {
    IntMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMat IntMat::row(int r) const {
    IntMat m(1, cols_);
    for (int j = 0; j < cols_; ++j) m.at(0, j) = at(r, j);
    return m;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw internal_error("det: not square");
    int n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// Shared row-echelon HNF pass. When u is non-null it carries the unimodular
// transform; rows beyond the returned rank form a kernel basis there.
int hnf_in_place(IntMat& h, IntMat* u) {
    int m = h.rows(), n = h.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // Euclidean elimination below row r in column c.
        for (;;) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best < 0 || cmp(abs(h.at(i, c)), abs(h.at(best, c))) < 0) best = i;
            }
            if (best < 0) break;
            if (best != r) {
                for (int j = 0; j < n; ++j) std::swap(h.at(r, j), h.at(best, j));
                if (u)
                    for (int j = 0; j < u->cols(); ++j) std::swap(u->at(r, j), u->at(best, j));
            }
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = floor_div(h.at(i, c), h.at(r, c));
                if (q != 0) {
                    for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(r, j);
                    if (u)
                        for (int j = 0; j < u->cols(); ++j) u->at(i, j) -= q * u->at(r, j);
                }
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            for (int j = 0; j < n; ++j) h.at(r, j) = -h.at(r, j);
            if (u)
                for (int j = 0; j < u->cols(); ++j) u->at(r, j) = -u->at(r, j);
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q == 0) continue;
            for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(r, j);
            if (u)
                for (int j = 0; j < u->cols(); ++j) u->at(i, j) -= q * u->at(r, j);
        }
        ++r;
    }
    return r;
}

IntMat take_rows(const IntMat& m, int count) {
    IntMat out(count, m.cols());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace

HnfResult hnf_rows(const IntMat& m) {
    IntMat h = m;
    int rank = hnf_in_place(h, nullptr);
    return {take_rows(h, rank), rank};
}

HnfTransformResult hnf_with_transform(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    int rank = hnf_in_place(h, &u);
    return {take_rows(h, rank), u, rank};
}

IntMat hnf(const IntMat& m) {
    HnfResult r = hnf_rows(m);
    if (r.rank < m.cols())
        throw precondition_error("hnf: rank-deficient input (rank " +
                                 std::to_string(r.rank) + " < " + std::to_string(m.cols()) + ")");
    return r.h;
}

IntMat kernel_mod(const IntMat& k, const Int& d) {
    int n = k.rows(), m = k.cols();
    IntMat dI(m, m);
    for (int i = 0; i < m; ++i) dI.at(i, i) = d;
    HnfTransformResult t = hnf_with_transform(k.stacked(dI));
    // Kernel rows of the stack are (y | z) with y*k + d*z = 0.
    int kernel_rows = n + m - t.rank;
    IntMat y(kernel_rows, n);
    for (int i = 0; i < kernel_rows; ++i)
        for (int j = 0; j < n; ++j) y.at(i, j) = t.u.at(t.rank + i, j);
    return hnf(y);
}

IntMat lattice_intersect(const IntMat& a, const IntMat& b) {
    int n = a.cols();
    if (a.rows() != n || b.rows() != n || b.cols() != n)
        throw internal_error("lattice_intersect: expects full-rank square bases");
    HnfTransformResult t = hnf_with_transform(a.stacked(b));
    int kernel_rows = 2 * n - t.rank;
    IntMat combo(kernel_rows, n);
    for (int i = 0; i < kernel_rows; ++i)
        for (int j = 0; j < n; ++j) combo.at(i, j) = t.u.at(t.rank + i, j);
    return hnf(combo.mul(a));
}

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : Int(p + 2))) {
        if (mod_floor(n, p) == 0) {
            out.push_back(p);
            while (mod_floor(n, p) == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace quatgraph
