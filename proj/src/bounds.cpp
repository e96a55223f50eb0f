#include "quatgraph/bounds.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace quatgraph {

int MultiGraph::valency(int v) const {
    int val = 0;
    for (const Edge& e : edges) {
        if (e.u == v && e.v == v) val += 2 * e.mult;
        else if (e.u == v || e.v == v) val += e.mult;
    }
    if (v < static_cast<int>(half_edges.size())) val += half_edges[v];
    return val;
}

int MultiGraph::edge_count() const {
    int total = 0;
    for (const Edge& e : edges) total += e.mult;
    return total;
}

bool MultiGraph::connected() const {
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Edge& e : edges) {
            int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++count;
                queue.push_back(other);
            }
        }
    }
    return count == n;
}

void MultiGraph::add_edge(int u, int v, int mult) {
    if (u > v) std::swap(u, v);
    for (Edge& e : edges)
        if (e.u == u && e.v == v) {
            e.mult += mult;
            return;
        }
    edges.push_back({u, v, mult});
}

BoundReport check_prop51(const MultiGraph& g) {
    for (int h : g.half_edges)
        if (h != 0) throw precondition_error("check_prop51: plain multigraph expected");
    if (!g.connected()) throw precondition_error("check_prop51: graph must be connected");
    BoundReport rep;
    rep.n = g.n;
    for (int v = 0; v < g.n; ++v) {
        int val = g.valency(v);
        if (val > 3) throw precondition_error("check_prop51: valency exceeds 3");
        if (val == 1) ++rep.r;
    }
    rep.t = rep.n - rep.r;
    int edges = g.edge_count();
    // Proof identities: connectedness and the handshake bound.
    if (edges < rep.n - 1) throw internal_error("connected graph with too few edges");
    if (3 * rep.t + rep.r < 2 * edges)
        throw internal_error("handshake inequality violated");
    rep.bound_holds = rep.r <= rep.t + 2 && 2 * rep.r <= rep.n + 2;
    rep.equality = rep.r == rep.t + 2;
    bool is_tree = edges == rep.n - 1;
    bool valencies_13 = true;
    for (int v = 0; v < g.n; ++v) {
        int val = g.valency(v);
        if (val != 1 && val != 3) valencies_13 = false;
    }
    rep.conditions_hold = is_tree && valencies_13;
    rep.characterization_holds = rep.equality == rep.conditions_hold;
    return rep;
}

BoundReport check_prop52(const MultiGraph& g) {
    if (!g.side) throw precondition_error("check_prop52: bipartition labels required");
    for (int h : g.half_edges)
        if (h != 0) throw precondition_error("check_prop52: plain multigraph expected");
    const std::vector<int>& side = *g.side;
    for (const MultiGraph::Edge& e : g.edges)
        if (side[e.u] == side[e.v])
            throw precondition_error("check_prop52: edge inside one part");
    if (!g.connected()) throw precondition_error("check_prop52: graph must be connected");
    BoundReport rep;
    std::vector<int> val(g.n);
    for (int v = 0; v < g.n; ++v) {
        val[v] = g.valency(v);
        if (val[v] > 3) throw precondition_error("check_prop52: valency exceeds 3");
    }
    long na = 0;
    for (int v = 0; v < g.n; ++v) {
        if (side[v] == 1) {
            ++rep.n;
            if (val[v] == 1) ++rep.r;
        } else {
            ++na;
        }
    }
    rep.t = rep.n - rep.r;
    rep.bound_holds = 4 * rep.r <= 3 * (rep.n + 1);
    rep.equality = 4 * rep.r == 3 * (rep.n + 1);

    bool is_tree = g.edge_count() == g.n - 1;
    bool a_val3 = true, b_val13 = true;
    for (int v = 0; v < g.n; ++v) {
        if (side[v] == 0 && val[v] != 3) a_val3 = false;
        if (side[v] == 1 && val[v] != 1 && val[v] != 3) b_val13 = false;
    }
    rep.conditions_hold = is_tree && a_val3 && b_val13;
    rep.characterization_holds = rep.equality == rep.conditions_hold;

    if (rep.conditions_hold) {
        long q = 0;  // A-vertices with all three neighbors endpoints (the claw)
        for (int v = 0; v < g.n; ++v) {
            if (side[v] != 0) continue;
            int endpoint_nbrs = 0;
            for (const MultiGraph::Edge& e : g.edges) {
                int other = e.u == v ? e.v : (e.v == v ? e.u : -1);
                if (other >= 0 && val[other] == 1) endpoint_nbrs += e.mult;
            }
            if (endpoint_nbrs == 0) ++rep.m;
            else if (endpoint_nbrs == 1) ++rep.p;
            else if (endpoint_nbrs == 2) ++rep.s;
            else ++q;
        }
        if (q == 0) {
            rep.identities_hold = rep.m + rep.p + rep.s == na &&
                                  rep.r == rep.t + rep.m + rep.p + rep.s + 2 &&
                                  rep.r == rep.p + 2 * rep.s &&
                                  3 * rep.t == 3 * rep.m + 2 * rep.p + rep.s &&
                                  rep.r == 3 * (rep.t + 1);
        } else {
            // The claw K_{1,3}: its center has three endpoint neighbors,
            // outside the m/p/s classification; equality checked directly.
            rep.identities_hold = rep.equality && rep.n == 3 && rep.r == 3;
        }
    }
    return rep;
}

MultiGraph nailfork_reduce(const MultiGraph& g) {
    if (!g.side) throw precondition_error("nailfork_reduce: bipartition labels required");
    MultiGraph out = g;
    std::vector<int>& side = *out.side;
    out.half_edges.clear();
    auto new_vertex = [&](int s) {
        side.push_back(s);
        return out.n++;
    };
    auto add_fork = [&](int at) {
        // New A-vertex with an edge to `at` and two fresh B-leaves.
        int f = new_vertex(0);
        out.add_edge(at, f);
        out.add_edge(f, new_vertex(1));
        out.add_edge(f, new_vertex(1));
    };

    // Break cycles: replace a non-tree edge by a fork on the B-end and a
    // nail on the A-end.
    for (;;) {
        if (out.edge_count() == out.n - 1) break;
        // Spanning tree by BFS; the first surplus edge found gets removed.
        std::vector<int> parent(out.n, -2);
        parent[0] = -1;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const MultiGraph::Edge& e : out.edges) {
                int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
                if (other >= 0 && parent[other] == -2) {
                    parent[other] = u;
                    queue.push_back(other);
                }
            }
        }
        int cu = -1, cv = -1;
        for (size_t i = 0; i < out.edges.size() && cu < 0; ++i) {
            MultiGraph::Edge& e = out.edges[i];
            if (e.mult > 1) {
                cu = e.u;
                cv = e.v;
            } else if (parent[e.u] != e.v && parent[e.v] != e.u) {
                cu = e.u;
                cv = e.v;
            }
        }
        if (cu < 0) throw internal_error("no cycle edge found in non-tree graph");
        for (size_t i = 0; i < out.edges.size(); ++i) {
            if (out.edges[i].u == std::min(cu, cv) && out.edges[i].v == std::max(cu, cv)) {
                if (--out.edges[i].mult == 0) out.edges.erase(out.edges.begin() + i);
                break;
            }
        }
        int b_end = side[cu] == 1 ? cu : cv;
        int a_end = side[cu] == 1 ? cv : cu;
        add_fork(b_end);
        out.add_edge(a_end, new_vertex(1));  // nail
    }

    // A-vertices up to valency 3 with nails.
    for (int v = 0; v < out.n; ++v) {
        if (side[v] != 0) continue;
        int val = out.valency(v);
        for (int k = val; k < 3; ++k) out.add_edge(v, new_vertex(1));
    }
    // B-vertices of valency 0 or 2 get one fork.
    for (int v = 0; v < out.n; ++v) {
        if (side[v] != 1) continue;
        int val = out.valency(v);
        if (val == 0 || val == 2) add_fork(v);
    }
    return out;
}

MultiGraph random_graph(int n, int max_valency, uint64_t seed) {
    if (n < 1) throw precondition_error("random_graph: n must be positive");
    if (max_valency < 2 && n > 1)
        throw precondition_error("random_graph: infeasible valency cap");
    std::mt19937_64 rng(seed);
    MultiGraph g;
    g.n = n;
    std::vector<int> val(n, 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (val[u] < max_valency) candidates.push_back(u);
        if (candidates.empty()) throw precondition_error("random_graph: infeasible valency cap");
        int u = candidates[rng() % candidates.size()];
        g.add_edge(u, v);
        ++val[u];
        ++val[v];
    }
    if (n >= 2) {
        int extra = static_cast<int>(rng() % (n / 2 + 1));
        for (int attempt = 0; attempt < 4 * extra; ++attempt) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (val[u] >= max_valency || val[v] >= max_valency) continue;
            bool exists = false;
            for (const MultiGraph::Edge& e : g.edges)
                if (e.u == u && e.v == v) exists = true;
            if (exists) continue;
            g.add_edge(u, v);
            ++val[u];
            ++val[v];
        }
    }
    return g;
}

MultiGraph random_bipartite(int na, int nb, uint64_t seed) {
    if (na < 1 || nb < 1) throw precondition_error("random_bipartite: parts must be nonempty");
    std::mt19937_64 rng(seed);
    MultiGraph g;
    g.n = na + nb;
    std::vector<int> side(g.n);
    for (int v = 0; v < g.n; ++v) side[v] = v < na ? 0 : 1;
    g.side = side;
    std::vector<int> val(g.n, 0);
    // Connected alternating skeleton: attach vertices in interleaved order.
    std::vector<int> order;
    for (int k = 0; k < std::max(na, nb); ++k) {
        if (k < na) order.push_back(k);
        if (k < nb) order.push_back(na + k);
    }
    for (size_t idx = 1; idx < order.size(); ++idx) {
        int v = order[idx];
        std::vector<int> candidates;
        for (size_t j = 0; j < idx; ++j) {
            int u = order[j];
            if (side[u] != side[v] && val[u] < 3) candidates.push_back(u);
        }
        if (candidates.empty())
            throw precondition_error("random_bipartite: infeasible valency caps");
        int u = candidates[rng() % candidates.size()];
        g.add_edge(u, v);
        ++val[u];
        ++val[v];
    }
    int extra = static_cast<int>(rng() % (g.n / 2 + 1));
    for (int attempt = 0; attempt < 4 * extra; ++attempt) {
        int u = static_cast<int>(rng() % na);
        int v = na + static_cast<int>(rng() % nb);
        if (val[u] >= 3 || val[v] >= 3) continue;
        bool exists = false;
        for (const MultiGraph::Edge& e : g.edges)
            if (e.u == std::min(u, v) && e.v == std::max(u, v)) exists = true;
        if (exists) continue;
        g.add_edge(u, v);
        ++val[u];
        ++val[v];
    }
    return g;
}

TheoremReport theorem_verdicts(const ClassifyingGraph& g) {
    TheoremReport rep;
    rep.n = g.n;
    rep.r = g.r;
    for (const ClassVertex& v : g.vertices)
        if (v.omega) ++rep.omega_classes;
    rep.thm1_holds = 2 * rep.r <= rep.n + 2;

    rep.thm2_applicable = g.bipartite;
    if (g.bipartite) {
        for (int part = 0; part < 2; ++part) {
            int np = 0, rp = 0;
            for (const ClassVertex& v : g.vertices)
                if (v.part == part) {
                    ++np;
                    if (v.endpoint) ++rp;
                }
            if (4 * rp > 3 * (np + 1)) rep.thm2_holds = false;
        }
    }

    // Executable contrapositive: a bipartite graph whose parts both
    // represent the cubic-unit order, with one part represented entirely,
    // must be a single edge.
    if (g.bipartite) {
        std::array<int, 2> omega_in{0, 0}, size_of{0, 0};
        for (const ClassVertex& v : g.vertices) {
            ++size_of[*v.part];
            if (v.omega) ++omega_in[*v.part];
        }
        bool both = omega_in[0] > 0 && omega_in[1] > 0;
        bool one_full = omega_in[0] == size_of[0] || omega_in[1] == size_of[1];
        rep.thm3_applicable = both && one_full;
        if (rep.thm3_applicable) rep.thm3_holds = rep.n == 2;
    }

    if (rep.omega_classes == 0) rep.selectivity = "not-represented";
    else if (rep.omega_classes == rep.n) rep.selectivity = "represented-everywhere";
    else rep.selectivity = "selective";
    rep.bounds_all_hold = rep.thm1_holds && rep.thm2_holds && rep.thm3_holds;
    return rep;
}

}  // namespace quatgraph
