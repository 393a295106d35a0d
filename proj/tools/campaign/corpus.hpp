#pragma once

#include <string>
#include <vector>

#include "campaign/report.hpp"
#include "zfx/graph.hpp"

namespace zfx::campaign {

struct Corpus {
    CorpusDescriptor descriptor;
    std::vector<Graph> graphs;
};

// Isomorphism class representatives on n_min..n_max vertices. Throws CapacityError above 8.
Corpus enumerated_corpus(int n_min, int n_max, bool connected_only);

// `source` names a graph6 file if one exists at that path, otherwise it is parsed as a
// single graph6 literal. Throws ParseError / CapacityError on bad input.
Corpus graph6_corpus(const std::string& source);

}  // namespace zfx::campaign
