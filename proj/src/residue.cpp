#include "quatgraph/residue.hpp"

#include <algorithm>

namespace quatgraph {

namespace {

unsigned long inv_mod(unsigned long x, unsigned long p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), Int(x).get_mpz_t(), Int(p).get_mpz_t()))
        throw internal_error("inv_mod: not invertible");
    return r.get_ui();
}

using Vec4 = std::array<unsigned long, 4>;

}  // namespace

Mat2 mat2_mul(const Mat2& x, const Mat2& y, unsigned long p) {
    return Mat2{(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
                (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
}

Mat2 ResidueSplitting::image(const QuatElement& x) const {
    auto coords = order_lattice.rational_coords(x);
    Mat2 m;
    for (int u = 0; u < 4; ++u) {
        if (coords[u].get_den() != 1)
            throw precondition_error("residue image of an element outside the order");
        unsigned long c = mpz_class(mod_floor(coords[u].get_num(), p)).get_ui();
        m.a = (m.a + c * basis_images[u].a) % pl;
        m.b = (m.b + c * basis_images[u].b) % pl;
        m.c = (m.c + c * basis_images[u].c) % pl;
        m.d = (m.d + c * basis_images[u].d) % pl;
    }
    return m;
}

ResidueSplitting split_residue(const QuatOrder& o, const Int& p) {
    const auto& ram = o.algebra().ramified().finite;
    if (std::find(ram.begin(), ram.end(), p) != ram.end())
        throw precondition_error("split_residue: algebra is ramified at p, no splitting exists");
    if (mod_floor(o.reduced_discriminant(), p) == 0)
        throw precondition_error("split_residue: order is not maximal at p");
    if (p > 1024) throw precondition_error("split_residue: prime too large for residue search");
    unsigned long pl = p.get_ui();

    // Structure constants of the order mod p.
    unsigned long cmat[4][4][4];
    std::vector<QuatElement> e = o.lattice().elements();
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            auto c = o.lattice().rational_coords(e[u] * e[v]);
            for (int w = 0; w < 4; ++w) {
                if (c[w].get_den() != 1) throw internal_error("order structure constants");
                cmat[u][v][w] = mpz_class(mod_floor(c[w].get_num(), p)).get_ui();
            }
        }
    auto mul = [&](const Vec4& x, const Vec4& y) {
        Vec4 z{0, 0, 0, 0};
        for (int u = 0; u < 4; ++u) {
            if (x[u] == 0) continue;
            for (int v = 0; v < 4; ++v) {
                if (y[v] == 0) continue;
                unsigned long f = (x[u] * y[v]) % pl;
                for (int w = 0; w < 4; ++w) z[w] = (z[w] + f * cmat[u][v][w]) % pl;
            }
        }
        return z;
    };
    Vec4 one_coords;
    {
        auto c = o.lattice().rational_coords(one(o.algebra()));
        for (int u = 0; u < 4; ++u)
            one_coords[u] = mpz_class(mod_floor(c[u].get_num(), p)).get_ui();
    }
    auto sub = [&](const Vec4& x, const Vec4& y) {
        Vec4 z;
        for (int u = 0; u < 4; ++u) z[u] = (x[u] + pl - y[u] % pl) % pl;
        return z;
    };
    auto is_zero = [](const Vec4& x) { return !x[0] && !x[1] && !x[2] && !x[3]; };

    // Exhaustive search for a nontrivial idempotent among the p^4 residues.
    Vec4 idem{0, 0, 0, 0};
    bool found = false;
    for (unsigned long m0 = 0; m0 < pl && !found; ++m0)
        for (unsigned long m1 = 0; m1 < pl && !found; ++m1)
            for (unsigned long m2 = 0; m2 < pl && !found; ++m2)
                for (unsigned long m3 = 0; m3 < pl && !found; ++m3) {
                    Vec4 x{m0, m1, m2, m3};
                    if (is_zero(x) || x == one_coords) continue;
                    if (mul(x, x) == x) {
                        idem = x;
                        found = true;
                    }
                }
    if (!found)
        throw internal_error("split_residue: no nontrivial idempotent (maximality bug)");

    Vec4 f = sub(one_coords, idem);
    auto first_nonzero_of = [&](auto produce) -> Vec4 {
        for (int u = 0; u < 4; ++u) {
            Vec4 g{0, 0, 0, 0};
            g[u] = 1;
            Vec4 r = produce(g);
            if (!is_zero(r)) return r;
        }
        throw internal_error("split_residue: corner subspace is zero");
    };
    Vec4 u12 = first_nonzero_of([&](const Vec4& g) { return mul(mul(idem, g), f); });
    Vec4 v21 = first_nonzero_of([&](const Vec4& g) { return mul(mul(f, g), idem); });
    // u * v spans the e-corner; normalize so that u * v = e.
    Vec4 uv = mul(u12, v21);
    unsigned long lambda = 0;
    for (int u = 0; u < 4; ++u)
        if (idem[u] != 0) { lambda = (uv[u] * inv_mod(idem[u], pl)) % pl; break; }
    if (lambda == 0) throw internal_error("split_residue: degenerate corner product");
    unsigned long li = inv_mod(lambda, pl);
    for (int u = 0; u < 4; ++u) v21[u] = (v21[u] * li) % pl;

    // Change of basis from (e11, e12, e21, e22) to the order basis.
    Vec4 units[4] = {idem, u12, v21, f};
    // Invert the 4x4 matrix whose rows are the matrix units (over F_p).
    unsigned long m[4][8];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = units[i][j];
        for (int j = 4; j < 8; ++j) m[i][j] = (j - 4 == i) ? 1 : 0;
    }
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw internal_error("split_residue: matrix units not independent");
        std::swap(m[c], m[piv]);
        unsigned long inv = inv_mod(m[c][c], pl);
        for (int j = 0; j < 8; ++j) m[c][j] = (m[c][j] * inv) % pl;
        for (int r = 0; r < 4; ++r) {
            if (r == c || m[r][c] == 0) continue;
            unsigned long fac = m[r][c];
            for (int j = 0; j < 8; ++j) m[r][j] = (m[r][j] + (pl - fac) * m[c][j]) % pl;
        }
    }
    ResidueSplitting out(p, pl, o.lattice());
    out.idempotent_coords = idem;
    for (int u = 0; u < 4; ++u) {
        // Coordinates of basis element u in the matrix-unit basis:
        // coeffs * U = delta_u, so coeffs is row u of U^-1.
        out.basis_images[u] =
            Mat2{m[u][4] % pl, m[u][5] % pl, m[u][6] % pl, m[u][7] % pl};
    }
    // Verify the map is multiplicative on all 16 basis products.
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            Mat2 lhs = mat2_mul(out.basis_images[u], out.basis_images[v], pl);
            Mat2 rhs = out.image(e[u] * e[v]);
            if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c || lhs.d != rhs.d)
                throw internal_error("split_residue: residue map is not multiplicative");
        }
    return out;
}

std::vector<std::pair<unsigned long, unsigned long>> projective_line(unsigned long p) {
    std::vector<std::pair<unsigned long, unsigned long>> lines;
    lines.emplace_back(0, 1);
    for (unsigned long t = 0; t < p; ++t) lines.emplace_back(1, t);
    return lines;
}

int line_image(const Mat2& m, int line_index, unsigned long p) {
    auto lines = projective_line(p);
    auto [w0, w1] = lines[line_index];
    unsigned long x0 = (m.a * w0 + m.b * w1) % p;
    unsigned long x1 = (m.c * w0 + m.d * w1) % p;
    if (x0 == 0 && x1 == 0) throw internal_error("line_image: singular residue action");
    if (x0 == 0) return 0;
    unsigned long t = (x1 * inv_mod(x0, p)) % p;
    return static_cast<int>(1 + t);
}

}  // namespace quatgraph
