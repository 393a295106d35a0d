#include "zfx/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "zfx/errors.hpp"
#include "zfx/isomorphism.hpp"

namespace zfx {

namespace {

using Level = std::vector<Graph>;

// Every graph on n vertices is a graph on n-1 vertices plus one vertex, so extending each
// class representative of order n-1 by every neighbourhood reaches every class of order n.
Level extend_level(const Level& previous, int n) {
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : previous) {
        for (Mask nbrs = 0; nbrs < bit(n - 1); ++nbrs) {
            GraphBuilder b(base);
            const int v = b.add_vertex();
            for (int w : vertices_of(nbrs)) b.add_edge(v, w);
            const Graph g = b.build();
            auto form = canonical_form(g);
            if (!classes.contains(form.code)) classes.emplace(form.code, relabel(g, form.labeling));
        }
    }
    Level out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

const Level& level(int n) {
    static std::mutex mutex;
    static std::array<std::optional<Level>, kMaxEnumerationOrder + 1> cache;
    std::lock_guard lock(mutex);
    if (!cache[0]) cache[0] = Level{Graph(0)};
    for (int k = 1; k <= n; ++k)
        if (!cache[static_cast<std::size_t>(k)])
            cache[static_cast<std::size_t>(k)] = extend_level(*cache[static_cast<std::size_t>(k - 1)], k);
    return *cache[static_cast<std::size_t>(n)];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    std::vector<Graph> out;
    for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
    if (n < 0) throw DomainError("negative vertex count");
    if (n > kMaxEnumerationOrder)
        throw CapacityError("built-in enumeration stops at " + std::to_string(kMaxEnumerationOrder) +
                            " vertices; supply larger corpora as graph6 files");
    for (const Graph& g : level(n))
        if (!connected_only || is_connected(g)) visit(g);
}

}  // namespace zfx
