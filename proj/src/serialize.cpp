#include "quatgraph/serialize.hpp"

#include <json.hpp>

namespace quatgraph {

using json = nlohmann::ordered_json;

namespace {

json algebra_json(const QuaternionAlgebra& alg) {
    return json{{"a", to_string(alg.a())}, {"b", to_string(alg.b())}};
}

json verdicts_json(const TheoremReport& rep) {
    json v;
    v["thm1_bound_holds"] = rep.thm1_holds;
    v["thm2_applicable"] = rep.thm2_applicable;
    v["thm2_bound_holds"] = rep.thm2_holds;
    v["thm3_applicable"] = rep.thm3_applicable;
    v["thm3_holds"] = rep.thm3_holds;
    v["omega_classes"] = rep.omega_classes;
    v["selectivity"] = rep.selectivity;
    return v;
}

json graph_json(const ClassifyingGraph& g) {
    json doc;
    doc["algebra"] = algebra_json(g.algebra);
    doc["p"] = g.p.get_si();
    doc["level"] = g.level.get_si();
    json vertices = json::array();
    for (const ClassVertex& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["denom"] = to_string(v.rep.lattice().denom());
        json basis = json::array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                basis.push_back(to_string(v.rep.lattice().basis().at(i, j)));
        jv["basis"] = basis;
        jv["unit_order"] = v.unit_order.get_si();
        jv["endpoint"] = v.endpoint;
        jv["omega"] = v.omega;
        if (v.part) jv["part"] = *v.part;
        else jv["part"] = nullptr;
        vertices.push_back(jv);
    }
    doc["vertices"] = vertices;
    json edges = json::array();
    for (const QuotientEdge& e : g.edges)
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"mult", e.mult}, {"inverted", e.inverted}});
    doc["edges"] = edges;
    doc["bipartite"] = g.bipartite;
    doc["n"] = g.n;
    doc["r"] = g.r;
    doc["verdicts"] = verdicts_json(theorem_verdicts(g));
    return doc;
}

}  // namespace

std::string ramify_to_json(const QuaternionAlgebra& alg) {
    const RamifiedPlaces& ram = alg.ramified();
    json doc;
    doc["a"] = to_string(alg.a());
    doc["b"] = to_string(alg.b());
    json primes = json::array();
    for (const Int& p : ram.finite) primes.push_back(to_string(p));
    doc["ramified"] = primes;
    doc["infinite"] = ram.infinite;
    doc["definite"] = is_definite(alg);
    return doc.dump(2) + "\n";
}

std::string graph_to_json(const ClassifyingGraph& g) { return graph_json(g).dump(2) + "\n"; }

ClassifyingGraph graph_from_json(const std::string& text) {
    json doc = json::parse(text);
    Rat a(doc["algebra"]["a"].get<std::string>());
    Rat b(doc["algebra"]["b"].get<std::string>());
    a.canonicalize();
    b.canonicalize();
    QuaternionAlgebra alg(a, b);
    ClassifyingGraph g{alg, Int(doc["p"].get<long>()), Int(doc["level"].get<long>()),
                       {},  {},                        false,
                       0,   0};
    for (const json& jv : doc["vertices"]) {
        Int denom(jv["denom"].get<std::string>());
        IntMat basis(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                basis.at(i, j) = Int(jv["basis"][i * 4 + j].get<std::string>());
        ClassVertex v{jv["id"].get<int>(),
                      QuatOrder(QuatLattice::from_raw(alg, denom, basis)),
                      Int(jv["unit_order"].get<long>()),
                      jv["endpoint"].get<bool>(),
                      jv["omega"].get<bool>(),
                      std::nullopt};
        if (!jv["part"].is_null()) v.part = jv["part"].get<int>();
        g.vertices.push_back(std::move(v));
    }
    for (const json& je : doc["edges"])
        g.edges.push_back({je["u"].get<int>(), je["v"].get<int>(), je["mult"].get<int>(),
                           je["inverted"].get<bool>()});
    g.bipartite = doc["bipartite"].get<bool>();
    g.n = doc["n"].get<int>();
    g.r = doc["r"].get<int>();
    return g;
}

std::string graph_to_dot(const ClassifyingGraph& g) {
    std::string out = "graph classifying {\n";
    out += "  node [shape=point, width=0.15];\n";
    for (const ClassVertex& v : g.vertices) out += "  v" + std::to_string(v.id) + ";\n";
    int stars = 0;
    for (const QuotientEdge& e : g.edges)
        if (e.inverted) stars += e.mult;
    for (int s = 0; s < stars; ++s)
        out += "  s" + std::to_string(s) + " [shape=none, width=0, label=\"*\"];\n";
    int star = 0;
    for (const QuotientEdge& e : g.edges) {
        for (int k = 0; k < e.mult; ++k) {
            if (e.inverted) {
                out += "  v" + std::to_string(e.u) + " -- s" + std::to_string(star++) + ";\n";
            } else {
                out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string locus_to_json(const LocusReport& rep) {
    json doc;
    doc["shape"] = locus_shape_name(rep.shape);
    doc["count"] = rep.vertices.size();
    doc["radius_searched"] = rep.radius_searched;
    doc["boundary_certified"] = rep.boundary_certified;
    json vs = json::array();
    for (const QuatOrder& o : rep.vertices) {
        json jv;
        jv["denom"] = to_string(o.lattice().denom());
        json basis = json::array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) basis.push_back(to_string(o.lattice().basis().at(i, j)));
        jv["basis"] = basis;
        vs.push_back(jv);
    }
    doc["vertices"] = vs;
    return doc.dump(2) + "\n";
}

bool graphs_equal(const ClassifyingGraph& a, const ClassifyingGraph& b) {
    if (!a.algebra.same_as(b.algebra) || a.p != b.p || a.level != b.level) return false;
    if (a.bipartite != b.bipartite || a.n != b.n || a.r != b.r) return false;
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    for (size_t i = 0; i < a.vertices.size(); ++i) {
        const ClassVertex& x = a.vertices[i];
        const ClassVertex& y = b.vertices[i];
        if (x.id != y.id || !(x.rep.lattice() == y.rep.lattice()) ||
            x.unit_order != y.unit_order || x.endpoint != y.endpoint || x.omega != y.omega ||
            x.part != y.part)
            return false;
    }
    for (size_t i = 0; i < a.edges.size(); ++i) {
        const QuotientEdge& x = a.edges[i];
        const QuotientEdge& y = b.edges[i];
        if (x.u != y.u || x.v != y.v || x.mult != y.mult || x.inverted != y.inverted)
            return false;
    }
    return true;
}

}  // namespace quatgraph
