#include "quatgraph/classgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "quatgraph/residue.hpp"

namespace quatgraph {

int ClassifyingGraph::valency(int id) const {
    int val = 0;
    for (const QuotientEdge& e : edges) {
        if (e.u == e.v) {
            if (e.u == id) val += e.inverted ? e.mult : 2 * e.mult;
        } else if (e.u == id || e.v == id) {
            val += e.mult;
        }
    }
    return val;
}

namespace {

bool ramified_at(const QuaternionAlgebra& alg, const Int& p) {
    const auto& fin = alg.ramified().finite;
    return std::find(fin.begin(), fin.end(), p) != fin.end();
}

// Conjugator x with x^-1 V x = W (via a generator of the primitively
// scaled connecting lattice V*W), or nothing when the classes differ.
std::optional<QuatElement> conjugacy_witness(const QuatOrder& v, const QuatOrder& w) {
    return principal_generator(v, v.lattice().product(w.lattice()));
}

}  // namespace

std::optional<QuatElement> inversion_test(const QuatOrder& d, const QuatOrder& dprime,
                                          const Int& p) {
    if (tree_distance(d, dprime, p) != 1)
        throw precondition_error("inversion_test: orders must be tree neighbors");
    std::vector<QuatLattice> search;
    search.push_back(d.lattice().intersect(dprime.lattice()));
    for (const QuatLattice* base : {&d.lattice(), &dprime.lattice()}) {
        QuatLattice conn = base == &d.lattice() ? d.lattice().product(dprime.lattice())
                                                : dprime.lattice().product(d.lattice());
        search.push_back(conn.scaled(1 / conn.coordinate_content(*base)));
    }
    // Inverting elements normalize D n D', so their norm is p times a
    // squarefree product of discriminant primes (two-sided twists), up to
    // rational squares; every such element is integral, hence lies in the
    // searched lattices. Norm p alone is not enough: some lines invert
    // only through a twist at a ramified prime.
    std::vector<Int> targets{p};
    for (const Int& q : prime_factors(d.reduced_discriminant())) {
        size_t count = targets.size();
        for (size_t i = 0; i < count; ++i) targets.push_back(targets[i] * q);
    }
    std::sort(targets.begin(), targets.end());
    for (const Int& target : targets) {
        std::set<std::array<Rat, 4>> seen;
        std::vector<QuatElement> candidates;
        for (const QuatLattice& lat : search) {
            for (const auto& coeffs : short_vectors(norm_gram(lat), target)) {
                QuatElement x = make_element(d.algebra(), 0, 0, 0, 0);
                for (int u = 0; u < 4; ++u) x = x + Rat(coeffs[u]) * lat.element(u);
                if (seen.insert(x.coords()).second) candidates.push_back(x);
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const QuatElement& a,
                                                           const QuatElement& b) {
            return a.coords() < b.coords();
        });
        for (const QuatElement& x : candidates) {
            if (d.lattice().conjugated_by(x) == dprime.lattice() &&
                dprime.lattice().conjugated_by(x) == d.lattice())
                return x;
        }
    }
    return std::nullopt;
}

ClassifyingGraph build_classifying_graph(const QuatOrder& d, const Int& p) {
    const QuaternionAlgebra& alg = d.algebra();
    if (!is_definite(alg))
        throw precondition_error("classifying graph: algebra must be definite");
    if (ramified_at(alg, p))
        throw precondition_error("classifying graph: algebra must be unramified at p");
    if (mod_floor(d.reduced_discriminant(), p) == 0)
        throw precondition_error("classifying graph: order must be maximal at p");

    Int ram_disc = 1;
    for (const Int& q : alg.ramified().finite) ram_disc *= q;
    Int level = d.reduced_discriminant() / ram_disc;

    struct ClassData {
        QuatOrder rep;
        Int unit_count;
    };
    std::vector<ClassData> classes;
    classes.push_back({d, unit_group(d).order()});

    struct Stub {
        int from, to;
        enum Kind { regular, loop, half } kind;
    };
    std::vector<Stub> stubs;

    std::deque<int> queue{0};
    const size_t guard = 1000000;
    unsigned long pl = p.get_ui();
    int nlines = static_cast<int>(pl) + 1;

    while (!queue.empty()) {
        if (classes.size() > guard) throw internal_error("class search guard exceeded");
        int c = queue.front();
        queue.pop_front();
        QuatOrder rep = classes[c].rep;

        std::vector<QuatOrder> nbrs = neighbor_orders(rep, p);
        ResidueSplitting split = split_residue(rep, p);
        UnitGroup units = unit_group(rep);

        // Orbits of the unit action on the projective line.
        std::vector<int> orbit_of(nlines);
        for (int l = 0; l < nlines; ++l) orbit_of[l] = l;
        auto find_root = [&](int l) {
            while (orbit_of[l] != l) l = orbit_of[l] = orbit_of[orbit_of[l]];
            return l;
        };
        for (const QuatElement& u : units.elements) {
            Mat2 m = split.image(u);
            for (int l = 0; l < nlines; ++l) {
                int a = find_root(l), b = find_root(line_image(m, l, pl));
                if (a != b) orbit_of[std::max(a, b)] = std::min(a, b);
            }
        }
        std::map<int, std::vector<int>> orbits;  // root -> sorted members
        for (int l = 0; l < nlines; ++l) orbits[find_root(l)].push_back(l);

        std::set<int> consumed;
        for (const auto& [root_line, members] : orbits) {
            if (consumed.count(root_line)) continue;
            consumed.insert(root_line);
            const QuatOrder& nbr = nbrs[root_line];

            int target = -1;
            std::optional<QuatElement> witness;
            Int nbr_units = unit_group(nbr).order();
            for (size_t k = 0; k < classes.size(); ++k) {
                if (classes[k].unit_count != nbr_units) continue;
                witness = conjugacy_witness(nbr, classes[k].rep);
                if (witness) {
                    target = static_cast<int>(k);
                    break;
                }
            }
            if (target < 0) {
                classes.push_back({nbr, nbr_units});
                target = static_cast<int>(classes.size()) - 1;
                queue.push_back(target);
                stubs.push_back({c, target, Stub::regular});
                continue;
            }
            if (target != c) {
                stubs.push_back({c, target, Stub::regular});
                continue;
            }
            // Neighbor in the same class. The return orbit through the
            // conjugation sending nbr back to rep either coincides with
            // this one (the edge reverses inside the norm 2-power group)
            // or pairs with it; a paired edge still becomes a half-edge
            // when a twisted inversion reverses it.
            QuatElement g = *witness;
            QuatLattice partner = rep.lattice().conjugated_by(inverse(g));
            int partner_line = -1;
            for (int l = 0; l < nlines; ++l)
                if (nbrs[l].lattice() == partner) { partner_line = l; break; }
            if (partner_line < 0) throw internal_error("loop partner is not a neighbor");
            int partner_root = find_root(partner_line);
            std::optional<QuatElement> inv = inversion_test(rep, nbr, p);
            if (partner_root == root_line) {
                if (!inv) throw internal_error("self-paired orbit without inversion");
                stubs.push_back({c, c, Stub::half});
                continue;
            }
            if (consumed.count(partner_root))
                throw internal_error("loop partner orbit already consumed");
            consumed.insert(partner_root);
            stubs.push_back({c, c, inv ? Stub::half : Stub::loop});
        }
    }

    // Renumber classes by the canonical key of their representatives.
    std::vector<int> order_ids(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) order_ids[i] = static_cast<int>(i);
    std::sort(order_ids.begin(), order_ids.end(), [&](int a, int b) {
        return classes[a].rep.lattice().key() < classes[b].rep.lattice().key();
    });
    std::vector<int> new_id(classes.size());
    for (size_t i = 0; i < order_ids.size(); ++i) new_id[order_ids[i]] = static_cast<int>(i);

    ClassifyingGraph g{alg, p, level, {}, {}, false, 0, 0};
    for (size_t i = 0; i < order_ids.size(); ++i) {
        const ClassData& cd = classes[order_ids[i]];
        ClassVertex v{static_cast<int>(i), cd.rep, cd.unit_count / 2, false, false, std::nullopt};
        v.omega = embed_quadratic(cd.rep, Int(-1), Int(1)).has_value();
        g.vertices.push_back(std::move(v));
    }

    // Regular stubs appear once from each side of an edge; reconcile.
    std::map<std::pair<int, int>, int> directed;
    std::map<int, int> loops, halves;
    for (const Stub& s : stubs) {
        int u = new_id[s.from], v = new_id[s.to];
        if (s.kind == Stub::regular) {
            if (u == v) throw internal_error("regular stub with equal ends");
            ++directed[{u, v}];
        } else if (s.kind == Stub::loop) {
            ++loops[u];
        } else {
            ++halves[u];
        }
    }
    std::map<std::pair<int, int>, int> undirected;
    for (const auto& [uv, count] : directed) {
        auto [u, v] = uv;
        if (u > v) continue;
        auto back = directed.find({v, u});
        int back_count = back == directed.end() ? 0 : back->second;
        if (back_count != count)
            throw internal_error("edge reconciliation failed between classes " +
                                 std::to_string(u) + " and " + std::to_string(v));
        undirected[{u, v}] = count;
    }
    for (const auto& [uv, count] : directed)
        if (uv.first > uv.second && !undirected.count({uv.second, uv.first}))
            throw internal_error("edge reconciliation failed");
    for (const auto& [uv, mult] : undirected)
        g.edges.push_back({uv.first, uv.second, mult, false});
    for (const auto& [u, mult] : loops) g.edges.push_back({u, u, mult, false});
    for (const auto& [u, mult] : halves) g.edges.push_back({u, u, mult, true});
    std::sort(g.edges.begin(), g.edges.end(), [](const QuotientEdge& a, const QuotientEdge& b) {
        return std::tie(a.u, a.v, a.inverted) < std::tie(b.u, b.v, b.inverted);
    });

    g.n = static_cast<int>(g.vertices.size());
    for (ClassVertex& v : g.vertices) {
        int val = g.valency(v.id);
        if (val > nlines) throw internal_error("quotient valency exceeds p+1");
        v.endpoint = val == 1;
        if (v.endpoint) ++g.r;
    }
    spinor_partition(g);
    return g;
}

CrossCheckReport endpoints_cross_check(const ClassifyingGraph& g) {
    CrossCheckReport report;
    for (const ClassVertex& v : g.vertices)
        if (v.endpoint != v.omega) {
            report.ok = false;
            report.violations.push_back(v.id);
        }
    return report;
}

std::optional<std::vector<int>> spinor_partition(ClassifyingGraph& g) {
    for (ClassVertex& v : g.vertices) v.part.reset();
    g.bipartite = false;
    std::vector<int> color(g.vertices.size(), -1);
    for (const QuotientEdge& e : g.edges)
        if (e.u == e.v) return std::nullopt;  // loop or half-edge: odd closed walk
    if (g.vertices.empty()) return std::nullopt;
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const QuotientEdge& e : g.edges) {
            int other = -1;
            if (e.u == u) other = e.v;
            else if (e.v == u) other = e.u;
            else continue;
            if (color[other] < 0) {
                color[other] = 1 - color[u];
                queue.push_back(other);
            } else if (color[other] == color[u]) {
                return std::nullopt;
            }
        }
    }
    for (int c : color)
        if (c < 0) throw internal_error("classifying graph is not connected");
    for (ClassVertex& v : g.vertices) v.part = color[v.id];
    g.bipartite = true;
    return color;
}

const char* locus_shape_name(LocusShape s) {
    switch (s) {
        case LocusShape::empty: return "empty";
        case LocusShape::single_vertex: return "single-vertex";
        case LocusShape::edge_pair: return "edge-pair";
        case LocusShape::bounded_set: return "bounded-set";
        case LocusShape::unbounded_path: return "unbounded-path";
    }
    return "?";
}

LocusReport containment_locus(const std::vector<QuatElement>& gens, const QuatOrder& root,
                              const Int& p, int radius) {
    for (const QuatElement& x : gens) {
        for (const Rat& c : root.lattice().rational_coords(x)) {
            Int den = c.get_den();
            while (mod_floor(den, p) == 0) den /= p;
            if (den != 1)
                throw precondition_error(
                    "containment_locus: generator is not integral away from p");
        }
    }
    auto contains_all = [&](const QuatOrder& o) {
        for (const QuatElement& x : gens)
            if (!o.contains(x)) return false;
        return true;
    };

    struct BallVertex {
        QuatOrder order;
        int depth;
        bool in_locus;
        std::vector<int> nbrs;
    };
    std::vector<BallVertex> ball;
    std::map<std::vector<Int>, int> index;
    ball.push_back({root, 0, contains_all(root), {}});
    index[root.lattice().key()] = 0;
    for (size_t i = 0; i < ball.size(); ++i) {
        if (ball[i].depth >= radius) continue;
        for (QuatOrder& nb : neighbor_orders(ball[i].order, p)) {
            auto key = nb.lattice().key();
            auto it = index.find(key);
            if (it == index.end()) {
                int id = static_cast<int>(ball.size());
                index[key] = id;
                ball.push_back({nb, ball[i].depth + 1, contains_all(nb), {}});
                ball[i].nbrs.push_back(id);
                ball[id].nbrs.push_back(static_cast<int>(i));
            } else {
                // The tree has no cycles; only the parent can already exist.
                if (std::find(ball[i].nbrs.begin(), ball[i].nbrs.end(), it->second) ==
                    ball[i].nbrs.end()) {
                    ball[i].nbrs.push_back(it->second);
                    ball[it->second].nbrs.push_back(static_cast<int>(i));
                }
            }
        }
    }

    std::vector<int> locus;
    for (size_t i = 0; i < ball.size(); ++i)
        if (ball[i].in_locus) locus.push_back(static_cast<int>(i));

    bool certified = !locus.empty();
    for (int v : locus) {
        if (ball[v].depth < radius) continue;
        // Frontier locus vertex: probe the unexplored neighbors directly.
        for (QuatOrder& nb : neighbor_orders(ball[v].order, p)) {
            if (index.count(nb.lattice().key())) continue;
            if (contains_all(nb)) {
                certified = false;
                break;
            }
        }
        if (!certified) break;
    }

    LocusReport report;
    report.radius_searched = radius;
    report.boundary_certified = certified;
    if (locus.empty()) {
        report.shape = LocusShape::empty;
        return report;
    }

    // Induced locus adjacency.
    std::map<int, std::vector<int>> adj;
    for (int v : locus)
        for (int w : ball[v].nbrs)
            if (ball[w].in_locus) adj[v].push_back(w);
    bool connected;
    {
        std::set<int> seen{locus[0]};
        std::deque<int> q{locus[0]};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v])
                if (seen.insert(w).second) q.push_back(w);
        }
        connected = seen.size() == locus.size();
    }
    int max_deg = 0;
    for (int v : locus) max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));

    if (locus.size() == 1) {
        report.shape = LocusShape::single_vertex;
        report.vertices.push_back(ball[locus[0]].order);
        return report;
    }
    bool is_path = connected && max_deg <= 2;
    if (locus.size() == 2 && is_path && adj[locus[0]].size() == 1) {
        report.shape = LocusShape::edge_pair;
        for (int v : locus) report.vertices.push_back(ball[v].order);
        return report;
    }
    if (is_path) {
        // Order the vertices along the path.
        int start = locus[0];
        for (int v : locus)
            if (adj[v].size() <= 1) { start = v; break; }
        std::vector<int> ordered{start};
        std::set<int> seen{start};
        while (ordered.size() < locus.size()) {
            bool advanced = false;
            for (int w : adj[ordered.back()])
                if (seen.insert(w).second) {
                    ordered.push_back(w);
                    advanced = true;
                    break;
                }
            if (!advanced) throw internal_error("path walk failed");
        }
        for (int v : ordered) report.vertices.push_back(ball[v].order);
        report.shape = certified ? LocusShape::bounded_set : LocusShape::unbounded_path;
        return report;
    }
    std::sort(locus.begin(), locus.end(), [&](int a, int b) {
        return ball[a].order.lattice().key() < ball[b].order.lattice().key();
    });
    for (int v : locus) report.vertices.push_back(ball[v].order);
    report.shape = LocusShape::bounded_set;
    return report;
}

bool shift_check(const QuatElement& u, const LocusReport& locus) {
    if (locus.shape != LocusShape::unbounded_path)
        throw precondition_error("shift_check: locus is not an unbounded path");
    const auto& vs = locus.vertices;
    auto moved = [&](size_t i) { return vs[i].lattice().conjugated_by(u); };
    bool forward = true, backward = true;
    for (size_t i = 0; i < vs.size(); ++i) {
        QuatLattice m = moved(i);
        if (i + 1 < vs.size()) {
            if (!(m == vs[i + 1].lattice())) forward = false;
        }
        if (i > 0) {
            if (!(m == vs[i - 1].lattice())) backward = false;
        }
        if (!forward && !backward) return false;
    }
    return forward || backward;
}

OmegaDepthReport omega_depth_and_universal_embedding(const ClassifyingGraph& g) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> queue;
    for (const ClassVertex& v : g.vertices)
        if (v.endpoint) {
            dist[v.id] = 0;
            queue.push_back(v.id);
        }
    if (queue.empty())
        throw precondition_error("omega depth: graph has no non-virtual endpoint");
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const QuotientEdge& e : g.edges) {
            if (e.u == e.v) continue;
            int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
            if (other >= 0 && dist[other] < 0) {
                dist[other] = dist[u] + 1;
                queue.push_back(other);
            }
        }
    }
    OmegaDepthReport report;
    for (int d : dist) {
        if (d < 0) throw internal_error("omega depth: graph not connected");
        report.rho_star = std::max(report.rho_star, d);
    }
    if (report.rho_star == 0) {
        report.trace = -1;
        report.norm = 1;
    } else {
        report.trace = 0;
        report.norm = 3;
        for (int k = 1; k < report.rho_star; ++k) report.norm *= 4;
    }
    report.all_embed = true;
    for (const ClassVertex& v : g.vertices) {
        bool ok = embed_quadratic(v.rep, report.trace, report.norm).has_value();
        report.embeds.push_back(ok);
        if (!ok) report.all_embed = false;
    }
    return report;
}

bool mass_check(const ClassifyingGraph& g) {
    if (g.level != 1)
        throw precondition_error("mass_check: genus must be maximal orders");
    const auto& fin = g.algebra.ramified().finite;
    if (fin.size() != 1 || fin[0] == 2)
        throw precondition_error("mass_check: algebra must ramify at one odd prime");
    Rat total = 0;
    for (const ClassVertex& v : g.vertices) {
        Rat w(Int(1), v.unit_order);
        w.canonicalize();
        total += w;
    }
    Rat expected(Int(fin[0] - 1), Int(12));
    expected.canonicalize();
    return total == expected;
}

MaximalSuperorderCount count_maximal_superorders(const QuatOrder& o) {
    MaximalSuperorderCount out;
    const QuaternionAlgebra& alg = o.algebra();
    for (const Int& p : prime_factors(o.reduced_discriminant())) {
        bool ram = ramified_at(alg, p);
        Int v = v_adic(o.reduced_discriminant(), p);
        if (ram) continue;  // unique local maximal order regardless of v
        if (v == 0) continue;
        QuatOrder d0 = p_maximalize(o, p);
        int radius = 4;
        for (;;) {
            LocusReport rep = containment_locus(o.lattice().elements(), d0, p, radius);
            if (rep.boundary_certified) {
                out.count *= Int(rep.vertices.size());
                break;
            }
            radius *= 2;
            if (radius > 64)
                throw internal_error("superorder locus failed to certify");
        }
    }
    return out;
}

}  // namespace quatgraph
