#include <doctest.h>

#include "quatgraph/serialize.hpp"

using namespace quatgraph;

namespace {

ClassifyingGraph graph_for(long p) {
    return build_classifying_graph(maximal_order(algebra_for_ramification(p)), 2);
}

}  // namespace

TEST_CASE("graph JSON round-trips exactly") {
    for (long p : {3, 11}) {
        ClassifyingGraph g = graph_for(p);
        std::string text = graph_to_json(g);
        ClassifyingGraph back = graph_from_json(text);
        CHECK(graphs_equal(g, back));
        CHECK(graph_to_json(back) == text);
    }
}

TEST_CASE("serialization is byte-stable across rebuilds") {
    ClassifyingGraph a = graph_for(23);
    ClassifyingGraph b = graph_for(23);
    CHECK(graph_to_json(a) == graph_to_json(b));
    CHECK(graph_to_dot(a) == graph_to_dot(b));
}

TEST_CASE("DOT output for the one-endpoint genus") {
    std::string expected =
        "graph classifying {\n"
        "  node [shape=point, width=0.15];\n"
        "  v0;\n"
        "  s0 [shape=none, width=0, label=\"*\"];\n"
        "  v0 -- s0;\n"
        "}\n";
    CHECK(graph_to_dot(graph_for(3)) == expected);
}

TEST_CASE("DOT output for the two-virtual-endpoint genus") {
    std::string expected =
        "graph classifying {\n"
        "  node [shape=point, width=0.15];\n"
        "  v0;\n"
        "  s0 [shape=none, width=0, label=\"*\"];\n"
        "  s1 [shape=none, width=0, label=\"*\"];\n"
        "  v0 -- s0;\n"
        "  v0 -- s1;\n"
        "}\n";
    CHECK(graph_to_dot(graph_for(7)) == expected);
}

TEST_CASE("ramification JSON fields") {
    std::string doc = ramify_to_json(QuaternionAlgebra(Rat(-3), Rat(-3)));
    CHECK(doc.find("\"ramified\": [\n    \"3\"\n  ]") != std::string::npos);
    CHECK(doc.find("\"infinite\": true") != std::string::npos);
    CHECK(doc.find("\"definite\": true") != std::string::npos);
    std::string split = ramify_to_json(QuaternionAlgebra(Rat(1), Rat(1)));
    CHECK(split.find("\"ramified\": []") != std::string::npos);
    CHECK(split.find("\"infinite\": false") != std::string::npos);
}

TEST_CASE("corrupted serializations are rejected") {
    ClassifyingGraph g = graph_for(3);
    std::string text = graph_to_json(g);
    // A non-canonical basis must not round-trip silently.
    size_t pos = text.find("\"denom\": \"2\"");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad.replace(pos, 12, "\"denom\": \"4\"");
    CHECK_THROWS_AS(graph_from_json(bad), precondition_error);
}
