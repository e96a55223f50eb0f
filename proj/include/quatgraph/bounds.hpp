#pragma once

#include <cstdint>
#include <string>

#include "quatgraph/classgraph.hpp"

namespace quatgraph {

// Abstract multigraph for the valency-bound checkers. Loops count 2
// toward valency, half-edges 1. `side` (0 = A, 1 = B) is present for
// bipartite instances.
struct MultiGraph {
    int n = 0;
    struct Edge {
        int u, v;  // u <= v; loop when u == v
        int mult;
    };
    std::vector<Edge> edges;
    std::vector<int> half_edges;           // per-vertex counts; may be empty
    std::optional<std::vector<int>> side;  // bipartition labels

    int valency(int v) const;
    int edge_count() const;  // sum of multiplicities, half-edges excluded
    bool connected() const;
    void add_edge(int u, int v, int mult = 1);
};

struct BoundReport {
    int n = 0, r = 0, t = 0;
    long m = 0, p = 0, s = 0;  // A-vertices with 0/1/2 neighboring endpoints
    bool bound_holds = false;
    bool equality = false;
    bool conditions_hold = false;        // tree + valency conditions
    bool characterization_holds = false;  // equality <=> conditions
    bool identities_hold = true;          // proof identities, when applicable
};

// Connected, valency <= 3: r <= t+2 (equivalently r <= n/2+1), with the
// proof's intermediate inequalities and the equality characterization.
BoundReport check_prop51(const MultiGraph& g);

// Connected bipartite, valency <= 3: with n = |B| and r the endpoints in
// B, 4r <= 3(n+1); equality iff the graph is a tree with A-valencies 3
// and B-valencies in {1,3}.
BoundReport check_prop52(const MultiGraph& g);

// Cycle-breaking and grafting until the equality conditions of the
// bipartite bound hold; preserves t and never decreases r.
MultiGraph nailfork_reduce(const MultiGraph& g);

MultiGraph random_graph(int n, int max_valency, uint64_t seed);
MultiGraph random_bipartite(int na, int nb, uint64_t seed);

struct TheoremReport {
    int n = 0, r = 0;
    int omega_classes = 0;
    bool thm1_holds = false;
    bool thm2_applicable = false;
    bool thm2_holds = true;
    bool thm3_applicable = false;
    bool thm3_holds = true;
    std::string selectivity;  // "selective", "not-represented", "represented-everywhere"
    bool bounds_all_hold = false;
};

TheoremReport theorem_verdicts(const ClassifyingGraph& g);

}  // namespace quatgraph
