#pragma once

#include "quatgraph/tree.hpp"

namespace quatgraph {

struct ClassVertex {
    int id = 0;
    QuatOrder rep;
    Int unit_order;  // |units| / 2
    bool endpoint = false;
    bool omega = false;
    std::optional<int> part;
};

// Loops have u == v; an inverted edge is a half-edge to a virtual vertex
// (valency contribution 1 instead of 2).
struct QuotientEdge {
    int u = 0, v = 0;
    int mult = 1;
    bool inverted = false;
};

struct ClassifyingGraph {
    QuaternionAlgebra algebra;
    Int p;
    Int level;
    std::vector<ClassVertex> vertices;
    std::vector<QuotientEdge> edges;
    bool bipartite = false;
    int n = 0;
    int r = 0;

    int valency(int id) const;
};

// Quotient of the tree at p by the conjugation stabilizer of the base
// order away from p; vertices found by BFS with exact conjugacy tests.
ClassifyingGraph build_classifying_graph(const QuatOrder& d, const Int& p = 2);

// Element x of norm p with x D x^-1 = D' and x D' x^-1 = D, searched in
// D n D' and in both connecting ideals.
std::optional<QuatElement> inversion_test(const QuatOrder& d, const QuatOrder& dprime,
                                          const Int& p);

struct CrossCheckReport {
    bool ok = true;
    std::vector<int> violations;  // vertex ids with endpoint != omega
};
CrossCheckReport endpoints_cross_check(const ClassifyingGraph& g);

// Parity 2-coloring; loops and inverted edges are odd closed walks.
// Stores labels in the vertices and sets the bipartite flag.
std::optional<std::vector<int>> spinor_partition(ClassifyingGraph& g);

enum class LocusShape { empty, single_vertex, edge_pair, bounded_set, unbounded_path };
const char* locus_shape_name(LocusShape s);

struct LocusReport {
    std::vector<QuatOrder> vertices;  // path-ordered when the locus is a path
    LocusShape shape = LocusShape::empty;
    int radius_searched = 0;
    bool boundary_certified = false;
};

// Tree vertices within the given radius of root whose order contains all
// generators; generators must be integral away from p.
LocusReport containment_locus(const std::vector<QuatElement>& gens, const QuatOrder& root,
                              const Int& p, int radius);

// True iff conjugation by u moves every interior locus vertex to the next
// one, in a consistent direction along the path.
bool shift_check(const QuatElement& u, const LocusReport& locus);

struct OmegaDepthReport {
    int rho_star = 0;
    Int trace, norm;          // parameters of the verified quadratic element
    std::vector<bool> embeds;  // per class vertex
    bool all_embed = false;
};

// Max distance to the endpoint set, plus the universal embedding check
// for the corresponding quadratic suborder in every class.
OmegaDepthReport omega_depth_and_universal_embedding(const ClassifyingGraph& g);

// Sum over vertices of 1/unit_order against the classical value (q-1)/12
// for the genus of maximal orders ramified at the odd prime q.
bool mass_check(const ClassifyingGraph& g);

}  // namespace quatgraph
