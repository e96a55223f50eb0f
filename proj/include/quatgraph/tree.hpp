#pragma once

#include "quatgraph/ideal.hpp"

namespace quatgraph {

// Vertex of the local building at p: a global order maximal at p, equal
// to the walk's base order away from p.
struct TreeVertex {
    QuatOrder order;
    int depth = 0;
};

// Right orders of the p+1 norm-p left ideals, in projective-line order.
std::vector<QuatOrder> neighbor_orders(const QuatOrder& v, const Int& p);
std::vector<TreeVertex> neighbors(const TreeVertex& v, const Int& p);

// p-valuation of the reduced norm of the primitively scaled connecting
// ideal; equals the graph distance in the tree.
int tree_distance(const QuatOrder& v, const QuatOrder& w, const Int& p);

}  // namespace quatgraph
