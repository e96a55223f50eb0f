#include "quatgraph/order.hpp"

#include <algorithm>
#include <map>

namespace quatgraph {

namespace {

// Accumulates an HNF basis from element rows in chunks, so stacked
// matrices never exceed 8 rows.
struct RowAccumulator {
    Int denom = 1;
    IntMat rows;  // r x 4 HNF, r <= 4

    void add(const std::vector<std::array<Rat, 4>>& coords) {
        Int new_denom = denom;
        for (const auto& c : coords)
            for (const Rat& e : c) new_denom = lcm(new_denom, e.get_den());
        if (new_denom != denom) {
            Int f = new_denom / denom;
            for (int i = 0; i < rows.rows(); ++i)
                for (int j = 0; j < 4; ++j) rows.at(i, j) *= f;
            denom = new_denom;
        }
        size_t pos = 0;
        while (pos < coords.size()) {
            size_t chunk = std::min<size_t>(4, coords.size() - pos);
            IntMat add_rows(static_cast<int>(chunk), 4);
            for (size_t i = 0; i < chunk; ++i)
                for (int j = 0; j < 4; ++j) {
                    Rat scaled = coords[pos + i][j] * denom;
                    add_rows.at(static_cast<int>(i), j) = scaled.get_num();
                }
            rows = hnf_rows(rows.stacked(add_rows)).h;
            pos += chunk;
        }
    }

    int rank() const { return rows.rows(); }
};

std::array<Rat, 4> coords_of(const QuatElement& x) {
    return {x[0], x[1], x[2], x[3]};
}

}  // namespace

QuatLattice::QuatLattice(QuaternionAlgebra alg, Int denom, IntMat basis)
    : alg_(std::move(alg)), denom_(std::move(denom)), basis_(std::move(basis)) {
    // Canonical form: strip the common factor of denom and all entries.
    Int g = denom_;
    for (int i = 0; i < 4 && g != 1; ++i)
        for (int j = 0; j < 4 && g != 1; ++j) g = gcd(g, basis_.at(i, j));
    if (g > 1) {
        denom_ /= g;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) basis_.at(i, j) /= g;
    }
}

QuatLattice QuatLattice::from_elements(const QuaternionAlgebra& alg,
                                       const std::vector<QuatElement>& gens) {
    RowAccumulator acc;
    std::vector<std::array<Rat, 4>> coords;
    coords.reserve(gens.size());
    for (const QuatElement& g : gens) {
        if (!g.algebra().same_as(alg))
            throw precondition_error("lattice generators from a different algebra");
        coords.push_back(coords_of(g));
    }
    acc.add(coords);
    if (acc.rank() < 4)
        throw precondition_error("lattice rank " + std::to_string(acc.rank()) + " < 4");
    return QuatLattice(alg, acc.denom, acc.rows);
}

QuatLattice QuatLattice::from_raw(const QuaternionAlgebra& alg, const Int& denom,
                                  const IntMat& basis) {
    if (denom <= 0 || basis.rows() != 4 || basis.cols() != 4)
        throw precondition_error("from_raw: malformed lattice data");
    QuatLattice lat(alg, denom, hnf(basis));
    if (lat.denom() != denom || !(lat.basis() == basis))
        throw precondition_error("from_raw: representation is not canonical");
    return lat;
}

QuatElement QuatLattice::element(int i) const {
    Rat d(denom_);
    return make_element(alg_, Rat(basis_.at(i, 0)) / d, Rat(basis_.at(i, 1)) / d,
                        Rat(basis_.at(i, 2)) / d, Rat(basis_.at(i, 3)) / d);
}

std::vector<QuatElement> QuatLattice::elements() const {
    std::vector<QuatElement> out;
    out.reserve(4);
    for (int i = 0; i < 4; ++i) out.push_back(element(i));
    return out;
}

std::array<Rat, 4> QuatLattice::rational_coords(const QuatElement& x) const {
    if (!x.algebra().same_as(alg_))
        throw precondition_error("coords: element from a different algebra");
    // Solve y * basis = denom * x by forward substitution (basis is HNF).
    std::array<Rat, 4> y;
    for (int c = 0; c < 4; ++c) {
        Rat acc = Rat(denom_) * x[c];
        for (int i = 0; i < c; ++i) acc -= y[i] * basis_.at(i, c);
        y[c] = acc / Rat(basis_.at(c, c));
    }
    return y;
}

bool QuatLattice::contains(const QuatElement& x) const {
    for (const Rat& v : rational_coords(x))
        if (v.get_den() != 1) return false;
    return true;
}

QuatLattice QuatLattice::product(const QuatLattice& rhs) const {
    if (!alg_.same_as(rhs.alg_)) throw precondition_error("product: algebra mismatch");
    RowAccumulator acc;
    for (int i = 0; i < 4; ++i) {
        QuatElement a = element(i);
        std::vector<std::array<Rat, 4>> coords;
        coords.reserve(4);
        for (int j = 0; j < 4; ++j) coords.push_back(coords_of(a * rhs.element(j)));
        acc.add(coords);
    }
    if (acc.rank() < 4) throw internal_error("product lattice lost rank");
    return QuatLattice(alg_, acc.denom, acc.rows);
}

QuatLattice QuatLattice::sum(const QuatLattice& rhs) const {
    std::vector<QuatElement> gens = elements();
    for (auto& e : rhs.elements()) gens.push_back(e);
    return from_elements(alg_, gens);
}

QuatLattice QuatLattice::intersect(const QuatLattice& rhs) const {
    if (!alg_.same_as(rhs.alg_)) throw precondition_error("intersect: algebra mismatch");
    Int d = lcm(denom_, rhs.denom_);
    IntMat a = basis_, b = rhs.basis_;
    Int fa = d / denom_, fb = d / rhs.denom_;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            a.at(i, j) *= fa;
            b.at(i, j) *= fb;
        }
    return QuatLattice(alg_, d, lattice_intersect(a, b));
}

QuatLattice QuatLattice::scaled(const Rat& s) const {
    if (s == 0) throw precondition_error("scaling a lattice by zero");
    Int num = abs(Int(s.get_num()));
    IntMat b = basis_;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b.at(i, j) *= num;
    return QuatLattice(alg_, Int(denom_ * s.get_den()), b);
}

QuatLattice QuatLattice::conjugated_by(const QuatElement& x) const {
    QuatElement xi = inverse(x);
    std::vector<QuatElement> gens;
    gens.reserve(4);
    for (int i = 0; i < 4; ++i) gens.push_back(x * element(i) * xi);
    return from_elements(alg_, gens);
}

Rat QuatLattice::coordinate_content(const QuatLattice& ref) const {
    Rat g = 0;
    for (int i = 0; i < 4; ++i)
        for (const Rat& c : ref.rational_coords(element(i))) g = rat_gcd(g, c);
    if (g == 0) throw internal_error("coordinate_content of zero lattice");
    return g;
}

Rat QuatLattice::index_in(const QuatLattice& ref) const {
    Rat mine = Rat(basis_.det()) / (Rat(denom_) * denom_ * denom_ * denom_);
    Rat theirs = Rat(ref.basis_.det()) /
                 (Rat(ref.denom_) * ref.denom_ * ref.denom_ * ref.denom_);
    Rat idx = mine / theirs;
    if (idx < 0) idx = -idx;
    return idx;
}

std::vector<Int> QuatLattice::key() const {
    std::vector<Int> k;
    k.reserve(17);
    k.push_back(denom_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) k.push_back(basis_.at(i, j));
    return k;
}

GramForm norm_gram(const QuatLattice& lat) {
    std::vector<Rat> entries(16);
    std::vector<QuatElement> e = lat.elements();
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Rat b = trd(e[i] * conj(e[j])) / 2;
            entries[i * 4 + j] = b;
            entries[j * 4 + i] = b;
        }
    return GramForm::from_rational(entries, 4);
}

QuatLattice colon_lattice(const QuatLattice& a, const QuatLattice& b, bool multiply_on_left) {
    // Any x with x*b in a satisfies x in a * f^-1 for invertible f in b.
    std::optional<QuatElement> f;
    for (int i = 0; i < 4; ++i)
        if (nrd(b.element(i)) != 0) { f = b.element(i); break; }
    if (!f) {
        for (int i = 0; i < 4 && !f; ++i)
            for (int j = i + 1; j < 4 && !f; ++j) {
                QuatElement s = b.element(i) + b.element(j);
                if (nrd(s) != 0) f = s;
            }
    }
    if (!f) throw internal_error("colon_lattice: no invertible element found");
    QuatElement fi = inverse(*f);
    std::vector<QuatElement> wgens;
    wgens.reserve(4);
    for (int i = 0; i < 4; ++i)
        wgens.push_back(multiply_on_left ? a.element(i) * fi : fi * a.element(i));
    QuatLattice w = QuatLattice::from_elements(a.algebra(), wgens);

    // Membership conditions x * b_l in a (resp. b_l * x) cut out a
    // sublattice of w in its integer coordinates.
    std::vector<QuatElement> we = w.elements();
    IntMat solution = IntMat::identity(4);
    bool first = true;
    for (int l = 0; l < 4; ++l) {
        QuatElement bl = b.element(l);
        IntMat num(4, 4);
        Int den = 1;
        std::vector<std::array<Rat, 4>> rows(4);
        for (int m = 0; m < 4; ++m) {
            QuatElement prod = multiply_on_left ? we[m] * bl : bl * we[m];
            rows[m] = a.rational_coords(prod);
            for (const Rat& c : rows[m]) den = lcm(den, c.get_den());
        }
        for (int m = 0; m < 4; ++m)
            for (int c = 0; c < 4; ++c) {
                Rat scaled = rows[m][c] * den;
                num.at(m, c) = scaled.get_num();
            }
        if (den == 1) continue;  // condition already satisfied on all of w
        IntMat ker = kernel_mod(num, den);
        solution = first ? ker : lattice_intersect(solution, ker);
        first = false;
    }

    std::vector<QuatElement> ogens;
    ogens.reserve(4);
    for (int i = 0; i < 4; ++i) {
        QuatElement x = make_element(a.algebra(), 0, 0, 0, 0);
        for (int m = 0; m < 4; ++m) x = x + Rat(solution.at(i, m)) * we[m];
        ogens.push_back(x);
    }
    return QuatLattice::from_elements(a.algebra(), ogens);
}

QuatOrder::QuatOrder(QuatLattice lat) : lat_(std::move(lat)), disc_(0) {
    if (!lat_.contains(one(lat_.algebra())))
        throw precondition_error("order must contain 1");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!lat_.contains(lat_.element(i) * lat_.element(j)))
                throw precondition_error("lattice is not closed under multiplication");
    // Reduced discriminant from the trace pairing of the basis.
    std::vector<QuatElement> e = lat_.elements();
    IntMat g(4, 4);
    Int den = 1;
    std::vector<std::array<Rat, 4>> rows(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat t = trd(e[i] * conj(e[j]));
            rows[i][j] = t;
            den = lcm(den, t.get_den());
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat scaled = rows[i][j] * den;
            g.at(i, j) = scaled.get_num();
        }
    Rat det = Rat(g.det()) / (Rat(den) * den * den * den);
    if (det < 0) det = -det;
    if (det.get_den() != 1 || !is_perfect_square(det.get_num(), &disc_))
        throw internal_error("order discriminant is not a perfect square");
}

Int reduced_discriminant(const QuatOrder& o) { return o.reduced_discriminant(); }

QuatOrder standard_order(const QuaternionAlgebra& alg) {
    QuatElement i = Rat(alg.a().get_den()) * gen_i(alg);
    QuatElement j = Rat(alg.b().get_den()) * gen_j(alg);
    return QuatOrder(QuatLattice::from_elements(alg, {one(alg), i, j, i * j}));
}

QuatOrder order_from_generators(const QuaternionAlgebra& alg,
                                const std::vector<QuatElement>& gens) {
    RowAccumulator acc;
    std::vector<std::array<Rat, 4>> coords{coords_of(one(alg))};
    for (const QuatElement& g : gens) {
        if (!g.algebra().same_as(alg))
            throw precondition_error("generators from a different algebra");
        coords.push_back(coords_of(g));
    }
    acc.add(coords);

    auto spanning = [&]() {
        std::vector<QuatElement> out;
        for (int i = 0; i < acc.rank(); ++i) {
            std::array<Rat, 4> c;
            for (int j = 0; j < 4; ++j) c[j] = Rat(acc.rows.at(i, j)) / Rat(acc.denom);
            out.push_back(QuatElement(alg, c));
        }
        return out;
    };

    for (int iter = 0; iter < 64; ++iter) {
        std::vector<QuatElement> e = spanning();
        std::vector<std::array<Rat, 4>> prods;
        for (const QuatElement& x : e)
            for (const QuatElement& y : e) prods.push_back(coords_of(x * y));
        Int old_denom = acc.denom;
        IntMat old_rows = acc.rows;
        acc.add(prods);
        if (acc.denom == old_denom && acc.rows == old_rows) {
            if (acc.rank() < 4)
                throw precondition_error("generated ring has rank " +
                                         std::to_string(acc.rank()) + " < 4");
            return QuatOrder(QuatLattice::from_elements(alg, spanning()));
        }
        // A denominator that keeps growing squares every round; cut the
        // saturation off well before the integers get large.
        if (mpz_sizeinbase(acc.denom.get_mpz_t(), 2) > 256)
            throw precondition_error(
                "generators are not integral: multiplication did not close");
    }
    throw precondition_error(
        "generators are not integral: multiplication did not close after saturation limit");
}

namespace {

// Coefficient vectors (mod p) spanning the radical of O/pO.
std::vector<std::vector<Int>> radical_kernel(const QuatOrder& o, const Int& p) {
    std::vector<QuatElement> e = o.lattice().elements();
    if (p != 2) {
        // Kernel of the pairing (x, y) -> trd(xy) mod p. For odd p this is
        // exactly the radical: its elements square to zero, and nilpotents
        // pair to zero with everything.
        IntMat b(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat t = trd(e[i] * e[j]);
                if (t.get_den() != 1) throw internal_error("non-integral trace in order");
                b.at(i, j) = mod_floor(t.get_num(), p);
            }
        // Gaussian elimination over F_p.
        std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = b.at(i, j);
        std::vector<int> pivot_col;
        int rank = 0;
        for (int c = 0; c < 4 && rank < 4; ++c) {
            int piv = -1;
            for (int i = rank; i < 4; ++i)
                if (m[i][c] != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(m[rank], m[piv]);
            Int inv;
            mpz_invert(inv.get_mpz_t(), m[rank][c].get_mpz_t(), p.get_mpz_t());
            for (int j = 0; j < 4; ++j) m[rank][j] = mod_floor(m[rank][j] * inv, p);
            for (int i = 0; i < 4; ++i) {
                if (i == rank || m[i][c] == 0) continue;
                Int f = m[i][c];
                for (int j = 0; j < 4; ++j) m[i][j] = mod_floor(m[i][j] - f * m[rank][j], p);
            }
            pivot_col.push_back(c);
            ++rank;
        }
        // Solve y * B = 0: kernel of the symmetric pairing.
        std::vector<std::vector<Int>> kernel;
        std::vector<bool> is_pivot(4, false);
        for (int c : pivot_col) is_pivot[c] = true;
        for (int c = 0; c < 4; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Int> v(4, Int(0));
            v[c] = 1;
            for (int r = 0; r < rank; ++r)
                v[pivot_col[r]] = mod_floor(-m[r][c], p);
            kernel.push_back(v);
        }
        return kernel;
    }

    // p = 2: the trace pairing may degenerate, so find the largest nil
    // ideal by brute force over the 16 residue classes.
    Int cmat[4][4][4];
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            auto c = o.lattice().rational_coords(e[u] * e[v]);
            for (int w = 0; w < 4; ++w) {
                if (c[w].get_den() != 1) throw internal_error("order structure constants");
                cmat[u][v][w] = mod_floor(c[w].get_num(), 2);
            }
        }
    auto mul = [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        std::array<int, 4> z{0, 0, 0, 0};
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) {
                if (x[u] == 0 || y[v] == 0) continue;
                for (int w = 0; w < 4; ++w)
                    z[w] ^= static_cast<int>(cmat[u][v][w].get_si()) & x[u] & y[v];
            }
        return z;
    };
    auto reduce_span = [](std::vector<std::array<int, 4>> vs) {
        std::vector<std::array<int, 4>> basis;
        for (auto v : vs) {
            for (const auto& b : basis) {
                int lead = -1;
                for (int i = 0; i < 4; ++i)
                    if (b[i]) { lead = i; break; }
                if (lead >= 0 && v[lead])
                    for (int i = 0; i < 4; ++i) v[i] ^= b[i];
            }
            bool nonzero = v[0] || v[1] || v[2] || v[3];
            if (nonzero) {
                basis.push_back(v);
                std::sort(basis.begin(), basis.end(),
                          [](const auto& a, const auto& b) { return a > b; });
            }
        }
        return basis;
    };
    std::array<std::array<int, 4>, 4> gens;
    for (int u = 0; u < 4; ++u) {
        gens[u] = {0, 0, 0, 0};
        gens[u][u] = 1;
    }
    auto two_sided_ideal = [&](std::array<int, 4> x) {
        std::vector<std::array<int, 4>> span{x};
        for (;;) {
            auto basis = reduce_span(span);
            std::vector<std::array<int, 4>> next = basis;
            for (const auto& b : basis)
                for (int u = 0; u < 4; ++u) {
                    next.push_back(mul(gens[u], b));
                    next.push_back(mul(b, gens[u]));
                }
            auto grown = reduce_span(next);
            if (grown.size() == basis.size()) return basis;
            span = grown;
        }
    };
    auto is_nil = [&](const std::vector<std::array<int, 4>>& ideal_basis) {
        std::vector<std::array<int, 4>> cur = ideal_basis;
        for (int step = 0; step < 4; ++step) {
            std::vector<std::array<int, 4>> prods;
            for (const auto& x : cur)
                for (const auto& y : ideal_basis) prods.push_back(mul(x, y));
            cur = reduce_span(prods);
            if (cur.empty()) return true;
        }
        return false;
    };
    std::vector<std::array<int, 4>> nil_elements;
    for (int mask = 1; mask < 16; ++mask) {
        std::array<int, 4> x{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
        if (is_nil(two_sided_ideal(x))) nil_elements.push_back(x);
    }
    auto basis = reduce_span(nil_elements);
    if ((1u << basis.size()) != nil_elements.size() + 1)
        throw internal_error("radical at 2: nil elements do not form a subspace");
    std::vector<std::vector<Int>> kernel;
    for (const auto& b : basis) {
        std::vector<Int> v(4);
        for (int i = 0; i < 4; ++i) v[i] = b[i];
        kernel.push_back(v);
    }
    return kernel;
}

QuatLattice radical_lattice(const QuatOrder& o, const Int& p) {
    std::vector<QuatElement> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(Rat(p) * o.element(i));
    for (const auto& coeffs : radical_kernel(o, p)) {
        QuatElement x = make_element(o.algebra(), 0, 0, 0, 0);
        for (int u = 0; u < 4; ++u) x = x + Rat(coeffs[u]) * o.element(u);
        gens.push_back(x);
    }
    return QuatLattice::from_elements(o.algebra(), gens);
}

// Index-p superorders via the p^3+p^2+p+1 lines of (1/p)O / O.
std::optional<QuatOrder> index_p_overorder(const QuatOrder& o, const Int& p) {
    if (p > 1024) throw internal_error("overorder search: prime too large");
    long pl = p.get_si();
    std::vector<std::array<long, 4>> lines;
    for (int first = 0; first < 4; ++first) {
        std::array<long, 4> w{0, 0, 0, 0};
        w[first] = 1;
        long free_coords = 3 - first;
        long total = 1;
        for (long k = 0; k < free_coords; ++k) total *= pl;
        for (long idx = 0; idx < total; ++idx) {
            long rest = idx;
            for (int c = first + 1; c < 4; ++c) {
                w[c] = rest % pl;
                rest /= pl;
            }
            lines.push_back(w);
        }
    }
    for (const auto& w : lines) {
        QuatElement v = make_element(o.algebra(), 0, 0, 0, 0);
        for (int u = 0; u < 4; ++u) v = v + Rat(w[u]) * o.element(u);
        v = Rat(1, p) * v;
        std::vector<QuatElement> gens = o.lattice().elements();
        gens.push_back(v);
        QuatLattice l = QuatLattice::from_elements(o.algebra(), gens);
        bool closed = l.contains(v * v);
        for (int u = 0; u < 4 && closed; ++u)
            closed = l.contains(v * o.element(u)) && l.contains(o.element(u) * v);
        if (closed) return QuatOrder(l);
    }
    return std::nullopt;
}

bool is_ramified_at(const QuaternionAlgebra& alg, const Int& p) {
    const auto& fin = alg.ramified().finite;
    return std::find(fin.begin(), fin.end(), p) != fin.end();
}

}  // namespace

QuatOrder p_maximalize(const QuatOrder& o, const Int& p) {
    if (!is_prime(p)) throw precondition_error("p_maximalize: p must be prime");
    Int target = is_ramified_at(o.algebra(), p) ? 1 : 0;
    QuatOrder cur = o;
    for (int iter = 0; iter < 64; ++iter) {
        Int v = cur.reduced_discriminant() == 1 ? Int(0)
                                                : (mod_floor(cur.reduced_discriminant(), p) == 0
                                                       ? v_adic(cur.reduced_discriminant(), p)
                                                       : Int(0));
        if (v == target) return cur;
        if (v < target) throw internal_error("discriminant below ramified target");
        QuatLattice rad = radical_lattice(cur, p);
        QuatLattice left = colon_lattice(rad, rad, true);
        if (!(left == cur.lattice())) {
            cur = QuatOrder(left);
            continue;
        }
        QuatLattice right = colon_lattice(rad, rad, false);
        if (!(right == cur.lattice())) {
            cur = QuatOrder(right);
            continue;
        }
        // Idealizer fixpoint: the order is hereditary, one index-p step left.
        if (v != 1) throw internal_error("idealizer stalled at valuation " + to_string(v));
        std::optional<QuatOrder> up = index_p_overorder(cur, p);
        if (!up) throw internal_error("hereditary order with no index-p superorder");
        cur = *up;
    }
    throw internal_error("p_maximalize: iteration guard exceeded");
}

QuatOrder maximal_order(const QuaternionAlgebra& alg) {
    QuatOrder o = standard_order(alg);
    for (const Int& p : prime_factors(o.reduced_discriminant())) o = p_maximalize(o, p);
    Int expected = 1;
    for (const Int& p : alg.ramified().finite) expected *= p;
    if (o.reduced_discriminant() != expected)
        throw internal_error("maximal order discriminant mismatch");
    return o;
}

UnitGroup unit_group(const QuatOrder& o) {
    if (!is_definite(o.algebra()))
        throw precondition_error("unit_group: algebra must be definite");
    GramForm g = norm_gram(o.lattice());
    UnitGroup units;
    for (const auto& v : short_vectors(g, 1)) {
        QuatElement x = make_element(o.algebra(), 0, 0, 0, 0);
        for (int u = 0; u < 4; ++u) x = x + Rat(v[u]) * o.element(u);
        units.elements.push_back(x);
        units.elements.push_back(-x);
    }
    return units;
}

std::optional<QuatElement> embed_quadratic(const QuatOrder& o, const Int& t, const Int& n) {
    if (t * t - 4 * n >= 0)
        throw precondition_error("embed_quadratic: t^2 - 4n must be negative");
    if (!is_definite(o.algebra()))
        throw precondition_error("embed_quadratic: algebra must be definite");
    std::vector<QuatElement> e = o.lattice().elements();
    std::array<Int, 4> tau;
    for (int i = 0; i < 4; ++i) {
        Rat tr = trd(e[i]);
        if (tr.get_den() != 1) throw internal_error("non-integral trace in order");
        tau[i] = tr.get_num();
    }
    // Particular solution of sum y_u tau_u = t.
    Int g = 0;
    std::array<Int, 4> part{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        if (tau[i] == 0) continue;
        if (g == 0) {
            g = tau[i];
            part = {0, 0, 0, 0};
            part[i] = 1;
        } else {
            Int gg, u, v;
            mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
                       tau[i].get_mpz_t());
            for (int j = 0; j < 4; ++j) part[j] *= u;
            part[i] += v;
            g = gg;
        }
    }
    if (g == 0 || mod_floor(t, abs(g)) != 0) return std::nullopt;
    Int mult = t / g;
    QuatElement x0 = make_element(o.algebra(), 0, 0, 0, 0);
    for (int i = 0; i < 4; ++i) x0 = x0 + Rat(part[i] * mult) * e[i];

    // Trace-zero directions: kernel of y -> y . tau.
    IntMat tmat(4, 1);
    for (int i = 0; i < 4; ++i) tmat.at(i, 0) = tau[i];
    HnfTransformResult tk = hnf_with_transform(tmat);
    if (tk.rank != 1) throw internal_error("trace form rank");
    std::vector<QuatElement> dir;
    for (int i = 1; i < 4; ++i) {
        QuatElement d = make_element(o.algebra(), 0, 0, 0, 0);
        for (int j = 0; j < 4; ++j) d = d + Rat(tk.u.at(i, j)) * e[j];
        dir.push_back(d);
    }

    // nrd(x0 + sum z_m dir_m) = n as a shifted positive definite form.
    std::vector<Rat> q(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i * 3 + j] = trd(dir[i] * conj(dir[j])) / 2;
    GramForm g3 = GramForm::from_rational(q, 3);
    std::array<Rat, 3> lin;
    for (int i = 0; i < 3; ++i) lin[i] = trd(x0 * conj(dir[i]));
    // Solve 2 Q s = lin for the completing shift.
    std::vector<std::vector<Rat>> solve(3, std::vector<Rat>(4));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) solve[i][j] = 2 * Rat(g3.mat.at(i, j)) * g3.scale;
        solve[i][3] = lin[i];
    }
    for (int c = 0; c < 3; ++c) {
        int piv = -1;
        for (int r = c; r < 3; ++r)
            if (solve[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw internal_error("degenerate trace-slice form");
        std::swap(solve[c], solve[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            Rat f = solve[r][c] / solve[c][c];
            for (int k = c; k < 4; ++k) solve[r][k] -= f * solve[c][k];
        }
    }
    std::vector<Rat> shift(3);
    for (int i = 0; i < 3; ++i) shift[i] = solve[i][3] / solve[i][i];
    Rat qs = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            qs += shift[i] * Rat(g3.mat.at(i, j)) * g3.scale * shift[j];
    Rat target = Rat(n) - nrd(x0) + qs;
    std::vector<std::vector<Int>> sols = short_vectors_shifted(g3, shift, target);
    std::optional<QuatElement> best;
    std::array<Rat, 4> best_coords{};
    for (const auto& z : sols) {
        QuatElement x = x0;
        for (int m = 0; m < 3; ++m) x = x + Rat(z[m]) * dir[m];
        if (trd(x) != t || nrd(x) != n) throw internal_error("embed_quadratic witness check");
        if (!best || x.coords() < best_coords) {
            best = x;
            best_coords = x.coords();
        }
    }
    return best;
}

}  // namespace quatgraph
