#pragma once

#include <string>

#include "quatgraph/bounds.hpp"

namespace quatgraph {

// Exact JSON documents: big integers are serialized as decimal strings.
std::string ramify_to_json(const QuaternionAlgebra& alg);
std::string graph_to_json(const ClassifyingGraph& g);
ClassifyingGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const ClassifyingGraph& g);
std::string locus_to_json(const LocusReport& rep);

bool graphs_equal(const ClassifyingGraph& a, const ClassifyingGraph& b);

}  // namespace quatgraph
