#include "quatgraph/ideal.hpp"

#include <algorithm>

#include "quatgraph/residue.hpp"

namespace quatgraph {

QuatOrder left_order(const QuatLattice& lat) {
    return QuatOrder(colon_lattice(lat, lat, true));
}

QuatOrder right_order(const QuatLattice& lat) {
    return QuatOrder(colon_lattice(lat, lat, false));
}

Rat ideal_norm(const QuatLattice& lat) {
    std::vector<QuatElement> e = lat.elements();
    Rat g = 0;
    for (int i = 0; i < 4; ++i) {
        g = rat_gcd(g, nrd(e[i]));
        for (int j = i + 1; j < 4; ++j) g = rat_gcd(g, trd(e[i] * conj(e[j])));
    }
    return g;
}

QuatIdeal make_ideal(const QuatLattice& lat) {
    return QuatIdeal{lat, left_order(lat), right_order(lat), ideal_norm(lat)};
}

QuatIdeal connecting_ideal(const QuatOrder& d1, const QuatOrder& d2) {
    QuatLattice lat = d1.lattice().product(d2.lattice());
    QuatIdeal ideal = make_ideal(lat);
    if (!(ideal.left == d1) || !(ideal.right == d2))
        throw internal_error("connecting ideal has unexpected orders");
    return ideal;
}

std::vector<QuatIdeal> left_ideals_norm_p(const QuatOrder& d, const Int& p) {
    ResidueSplitting split = split_residue(d, p);
    std::vector<QuatIdeal> out;
    auto lines = projective_line(split.pl);
    for (auto [w0, w1] : lines) {
        // x in I_w iff the residue matrix of x kills the column (w0, w1).
        IntMat k(4, 2);
        for (int u = 0; u < 4; ++u) {
            const Mat2& m = split.basis_images[u];
            k.at(u, 0) = Int((m.a * w0 + m.b * w1) % split.pl);
            k.at(u, 1) = Int((m.c * w0 + m.d * w1) % split.pl);
        }
        IntMat y = kernel_mod(k, p);
        std::vector<QuatElement> gens;
        for (int i = 0; i < 4; ++i) {
            QuatElement x = make_element(d.algebra(), 0, 0, 0, 0);
            for (int u = 0; u < 4; ++u) x = x + Rat(y.at(i, u)) * d.element(u);
            gens.push_back(x);
        }
        QuatLattice lat = QuatLattice::from_elements(d.algebra(), gens);
        QuatIdeal ideal = make_ideal(lat);
        if (!(ideal.left == d) || ideal.reduced_norm != p)
            throw internal_error("norm-p left ideal construction failed");
        out.push_back(std::move(ideal));
    }
    return out;
}

std::optional<QuatElement> principal_generator(const QuatOrder& left, const QuatLattice& lat) {
    if (!is_definite(left.algebra()))
        throw precondition_error("principal_generator: algebra must be definite");
    Rat content = lat.coordinate_content(left.lattice());
    QuatLattice prim = lat.scaled(1 / content);
    Rat norm = ideal_norm(prim);
    if (norm.get_den() != 1) throw internal_error("primitive ideal norm not integral");
    GramForm g = norm_gram(prim);
    for (const auto& v : short_vectors(g, Int(norm.get_num()))) {
        QuatElement x = make_element(left.algebra(), 0, 0, 0, 0);
        for (int u = 0; u < 4; ++u) x = x + Rat(v[u]) * prim.element(u);
        std::vector<QuatElement> rows;
        rows.reserve(4);
        for (int u = 0; u < 4; ++u) rows.push_back(left.element(u) * x);
        if (QuatLattice::from_elements(left.algebra(), rows) == prim) return content * x;
    }
    return std::nullopt;
}

std::optional<QuatElement> is_principal(const QuatIdeal& ideal) {
    return principal_generator(ideal.left, ideal.lattice);
}

QuatOrder eichler_order(const QuatOrder& d, const Int& level) {
    if (level < 1 || mod_floor(level, 2) == 0)
        throw precondition_error("eichler_order: level must be odd and positive");
    Int expected = 1;
    for (const Int& q : d.algebra().ramified().finite) expected *= q;
    if (d.reduced_discriminant() != expected)
        throw precondition_error("eichler_order: base order must be maximal");
    std::vector<Int> qs = prime_factors(level);
    Int rebuilt = 1;
    for (const Int& q : qs) rebuilt *= q;
    if (rebuilt != level) throw precondition_error("eichler_order: level must be squarefree");
    if (gcd(level, d.reduced_discriminant()) != 1)
        throw precondition_error("eichler_order: level must be coprime to the discriminant");
    QuatLattice e = d.lattice();
    for (const Int& q : qs) {
        QuatIdeal first = left_ideals_norm_p(d, q).front();
        e = e.intersect(first.right.lattice());
    }
    QuatOrder out{e};
    if (out.reduced_discriminant() != level * d.reduced_discriminant())
        throw internal_error("eichler order discriminant mismatch");
    return out;
}

}  // namespace quatgraph
