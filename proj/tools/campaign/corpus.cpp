#include "campaign/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/graph6.hpp"

namespace zfx::campaign {

Corpus enumerated_corpus(int n_min, int n_max, bool connected_only) {
    Corpus c;
    c.descriptor = {"enumeration", n_min, n_max, {}};
    if (connected_only) c.descriptor.filters.push_back("connected");
    for (int n = std::max(n_min, 0); n <= n_max; ++n) {
        auto level = enumerate_graphs(n, connected_only);
        c.graphs.insert(c.graphs.end(), level.begin(), level.end());
    }
    return c;
}

Corpus graph6_corpus(const std::string& source) {
    Corpus c;
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) throw DomainError("cannot open graph6 file " + source);
        c.graphs = read_graph6_stream(in);
    } else {
        c.graphs.push_back(parse_graph6(source));
    }
    c.descriptor.source = source;
    if (!c.graphs.empty()) {
        const auto [lo, hi] = std::minmax_element(c.graphs.begin(), c.graphs.end(),
                                                  [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
        c.descriptor.n_min = lo->order();
        c.descriptor.n_max = hi->order();
    }
    return c;
}

}  // namespace zfx::campaign
