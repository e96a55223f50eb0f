#include "quatgraph/tree.hpp"

namespace quatgraph {

std::vector<QuatOrder> neighbor_orders(const QuatOrder& v, const Int& p) {
    std::vector<QuatOrder> out;
    for (QuatIdeal& ideal : left_ideals_norm_p(v, p)) out.push_back(std::move(ideal.right));
    return out;
}

std::vector<TreeVertex> neighbors(const TreeVertex& v, const Int& p) {
    std::vector<TreeVertex> out;
    for (QuatOrder& o : neighbor_orders(v.order, p)) out.push_back({std::move(o), v.depth + 1});
    return out;
}

int tree_distance(const QuatOrder& v, const QuatOrder& w, const Int& p) {
    QuatLattice conn = v.lattice().product(w.lattice());
    Rat content = conn.coordinate_content(v.lattice());
    Rat norm = ideal_norm(conn.scaled(1 / content));
    if (norm.get_den() != 1) throw internal_error("tree_distance: norm not integral");
    Int n = norm.get_num();
    Int d = 0;
    while (mod_floor(n, p) == 0) {
        n /= p;
        ++d;
    }
    if (n != 1)
        throw precondition_error("tree_distance: vertices differ away from p");
    return static_cast<int>(d.get_si());
}

}  // namespace quatgraph
