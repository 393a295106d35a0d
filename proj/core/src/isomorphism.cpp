#include "zfx/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "zfx/errors.hpp"

namespace zfx {

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& pattern, const Graph& host, bool bijective)
        : pattern_(pattern), host_(host), bijective_(bijective),
          image_(static_cast<std::size_t>(pattern.order()), -1) {}

    std::optional<std::vector<int>> run() {
        if (extend(0, 0)) return image_;
        return std::nullopt;
    }

private:
    bool admissible(int p, int h) const {
        const int dp = pattern_.degree(p);
        const int dh = host_.degree(h);
        return bijective_ ? dp == dh : dp <= dh;
    }

    bool extend(int p, Mask used) {
        if (p == pattern_.order()) return true;
        for (int h = 0; h < host_.order(); ++h) {
            if ((used & bit(h)) != 0 || !admissible(p, h)) continue;
            bool consistent = true;
            for (int q = 0; q < p && consistent; ++q)
                consistent = pattern_.adjacent(p, q) == host_.adjacent(h, image_[static_cast<std::size_t>(q)]);
            if (!consistent) continue;
            image_[static_cast<std::size_t>(p)] = h;
            if (extend(p + 1, used | bit(h))) return true;
        }
        image_[static_cast<std::size_t>(p)] = -1;
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    bool bijective_;
    std::vector<int> image_;
};

// Colour refinement seeded by degree. Colours are ranks of invariant signatures,
// so equal graphs up to relabeling receive identical colour multisets.
std::vector<int> refine_colours(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(colour[static_cast<std::size_t>(v)]);
            std::vector<int> around;
            for (int w : vertices_of(g.row(v))) around.push_back(colour[static_cast<std::size_t>(w)]);
            std::sort(around.begin(), around.end());
            s.insert(s.end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        if (next == classes) break;
        classes = next;
    }
    return colour;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        const auto colour = refine_colours(g);
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)]; });
        slot_colour_.resize(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p)
            slot_colour_[static_cast<std::size_t>(p)] = colour[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
        vertex_colour_ = colour;
        total_bits_ = n_ * (n_ - 1) / 2;
        current_.assign(static_cast<std::size_t>(n_), -1);
    }

    CanonicalForm run() {
        search(0, 0, 0);
        return {best_code_, best_labeling_};
    }

private:
    void search(int pos, Mask used, std::uint64_t prefix) {
        if (pos == n_) {
            if (!found_ || prefix < best_code_) {
                found_ = true;
                best_code_ = prefix;
                best_labeling_ = current_;
            }
            return;
        }
        const int prefix_bits = pos * (pos + 1) / 2;
        for (int v = 0; v < n_; ++v) {
            if ((used & bit(v)) != 0) continue;
            if (vertex_colour_[static_cast<std::size_t>(v)] != slot_colour_[static_cast<std::size_t>(pos)]) continue;
            std::uint64_t code = prefix;
            for (int i = 0; i < pos; ++i)
                code = (code << 1) | (g_.adjacent(current_[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            if (found_) {
                const std::uint64_t best_prefix =
                    total_bits_ == 0 ? 0 : best_code_ >> (total_bits_ - prefix_bits);
                if (code > best_prefix) continue;
            }
            current_[static_cast<std::size_t>(pos)] = v;
            search(pos + 1, used | bit(v), code);
        }
        current_[static_cast<std::size_t>(pos)] = -1;
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> vertex_colour_;
    std::vector<int> slot_colour_;
    std::vector<int> current_;
    bool found_ = false;
    std::uint64_t best_code_ = 0;
    std::vector<int> best_labeling_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    return EmbeddingSearch(pattern, host, false).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return EmbeddingSearch(g, h, true).run().has_value();
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw CapacityError("canonical codes are limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
    return CanonicalSearch(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& labeling) {
    if (static_cast<int>(labeling.size()) != g.order()) throw DomainError("labeling size differs from graph order");
    std::vector<int> position(labeling.size(), -1);
    for (std::size_t p = 0; p < labeling.size(); ++p) {
        const int v = labeling[p];
        if (v < 0 || v >= g.order() || position[static_cast<std::size_t>(v)] != -1)
            throw DomainError("labeling is not a permutation");
        position[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
    return b.build();
}

}  // namespace zfx
