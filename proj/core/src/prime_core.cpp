#include "zfx/prime_core.hpp"

#include <algorithm>
#include <string>

#include "tree_draft.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/isomorphism.hpp"

namespace zfx {

std::string to_string(LeafBagKind kind) {
    switch (kind) {
        case LeafBagKind::clique: return "clique";
        case LeafBagKind::star_center_attached: return "star_center_attached";
        case LeafBagKind::star_leaf_attached: return "star_leaf_attached";
    }
    return "unknown";
}

LeafBagClass classify_leaf_bag(const GraphLabelledTree& t, int bag) {
    if (bag < 0 || bag >= t.bag_count()) throw DomainError("bag id out of range");
    if (!t.is_leaf_bag(bag)) throw DomainError("bag " + std::to_string(bag) + " is not a leaf bag");
    const Bag& b = t.bag(bag);
    const int edge = t.incident_edges(bag).front();
    switch (b.kind()) {
        case BagKind::prime: throw DomainError("bag " + std::to_string(bag) + " is prime");
        case BagKind::clique: return {LeafBagKind::clique, 0, edge};
        case BagKind::star: break;
    }
    const int center = *b.star_center();
    int leaves = 0;
    for (int v : b.ordinary_label_vertices())
        if (v != center) ++leaves;
    const bool at_center = b.marker_for(edge) == center;
    return {at_center ? LeafBagKind::star_center_attached : LeafBagKind::star_leaf_attached, leaves, edge};
}

std::optional<TwinPair> twin_from_leaf_bag(const GraphLabelledTree& t, int bag) {
    const LeafBagClass cls = classify_leaf_bag(t, bag);
    const Bag& b = t.bag(bag);
    std::vector<int> candidates;
    for (int v : b.ordinary_label_vertices())
        if (cls.kind == LeafBagKind::clique || v != *b.star_center()) candidates.push_back(b.vertex(v).id);
    if (candidates.size() < 2) return std::nullopt;
    std::sort(candidates.begin(), candidates.end());

    const TwinKind kind = cls.kind == LeafBagKind::clique ? TwinKind::true_twins : TwinKind::false_twins;
    const TwinPair pair{candidates[0], candidates[1], kind};
    if (twin_kind(reconstruct(t), pair.u, pair.v) != kind)
        throw InvariantError("leaf bag " + std::to_string(bag) + " does not yield twins in the represented graph");
    return pair;
}

namespace {

int unique_prime_bag(const GraphLabelledTree& t) {
    const auto summary = summarize(t);
    if (!summary.unique_prime)
        throw DomainError("expected exactly one prime bag, found " + std::to_string(summary.prime_bag_count));
    return *summary.unique_prime;
}

// Drops the given original ids from the draft and renumbers the rest in increasing order.
std::vector<int> renumber(detail::TreeDraft& d, Mask drop) {
    std::vector<int> new_id(static_cast<std::size_t>(d.vertex_count), -1);
    std::vector<int> kept;
    for (int v = 0; v < d.vertex_count; ++v) {
        if ((drop & bit(v)) != 0) continue;
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
        kept.push_back(v);
    }
    for (auto& bag : d.bags)
        if (bag.alive)
            for (auto& lv : bag.vertices)
                if (lv.role == LabelRole::ordinary) lv.id = new_id[static_cast<std::size_t>(lv.id)];
    d.vertex_count = static_cast<int>(kept.size());
    return kept;
}

void check_peeled(const GraphLabelledTree& result, const Graph& expected, const Graph& prime_label, const char* which) {
    if (!(reconstruct(result) == expected))
        throw InvariantError(std::string("peeled tree for ") + which + " does not reconstruct the vertex-deleted graph");
    const auto summary = summarize(result);
    if (!summary.unique_prime || !are_isomorphic(summary.prime_labels.front(), prime_label))
        throw InvariantError(std::string("peeling changed the prime bag for ") + which);
    if (!validate_reduced(result).empty())
        throw InvariantError(std::string("peeled tree for ") + which + " is not reduced");
}

}  // namespace

std::optional<int> pick_peelable_bag(const GraphLabelledTree& t) {
    const int prime = unique_prime_bag(t);
    const auto dist = t.distances_from(prime);
    std::optional<int> best;
    for (int b = 0; b < t.bag_count(); ++b) {
        if (!t.is_leaf_bag(b) || dist[static_cast<std::size_t>(b)] < 2) continue;
        if (!best || dist[static_cast<std::size_t>(b)] > dist[static_cast<std::size_t>(*best)]) best = b;
    }
    return best;
}

PeelResult peel(const GraphLabelledTree& t, int bag) {
    const LeafBagClass cls = classify_leaf_bag(t, bag);
    if (cls.kind != LeafBagKind::star_leaf_attached || cls.ordinary_leaf_count != 1)
        throw DomainError("peel needs a leaf-attached star leaf bag with exactly one ordinary leaf");
    const Bag& b = t.bag(bag);
    const int center_lv = *b.star_center();
    const int c = b.vertex(center_lv).id;
    int x = -1;
    for (int v : b.ordinary_label_vertices())
        if (v != center_lv) x = b.vertex(v).id;

    const int edge = cls.edge;
    const int neighbour = t.other_end(edge, bag);
    const Bag& a = t.bag(neighbour);
    if (a.kind() == BagKind::prime) throw DomainError("peel needs a non-prime neighbour bag");
    const int a_marker = *a.marker_for(edge);
    if (a.kind() == BagKind::star && a.star_center() == a_marker)
        throw InvariantError("leaf star attached to the center of a star bag in a reduced tree");

    const int prime = unique_prime_bag(t);
    const Graph prime_label = t.bag(prime).label();
    const Graph g = reconstruct(t);

    detail::TreeDraft first(t);
    first.bags[static_cast<std::size_t>(bag)].alive = false;
    first.edges[static_cast<std::size_t>(edge)].alive = false;
    first.bags[static_cast<std::size_t>(neighbour)].vertices[static_cast<std::size_t>(a_marker)] = ordinary_vertex(c);
    auto first_ids = renumber(first, bit(x));
    first.reduce();

    detail::TreeDraft second(t);
    second.bags[static_cast<std::size_t>(bag)].alive = false;
    second.edges[static_cast<std::size_t>(edge)].alive = false;
    second.erase_label_vertex(neighbour, a_marker);
    auto second_ids = renumber(second, bit(x) | bit(c));
    second.reduce();

    PeelResult out{first.freeze(), second.freeze(), x, c, std::move(first_ids), std::move(second_ids)};
    check_peeled(out.without_leaf, remove_vertices(g, bit(x)), prime_label, "G-x");
    check_peeled(out.without_leaf_and_center, remove_vertices(g, bit(x) | bit(c)), prime_label, "G-{x,c}");
    return out;
}

std::variant<TwinPair, PrimeCore> extract_prime_core(const GraphLabelledTree& t) {
    const int prime = unique_prime_bag(t);
    if (t.degree(prime) != t.bag_count() - 1) throw DomainError("tree is not star-centered at its prime bag");
    const Bag& p = t.bag(prime);
    const Graph g = reconstruct(t);

    // image[v] = vertex of G standing for label vertex v of P (c_i for the marker of leaf bag i).
    std::vector<int> image(static_cast<std::size_t>(p.size()), -1);
    std::vector<std::pair<int, int>> pendants;  // (center, leaf) in G
    for (int v = 0; v < p.size(); ++v)
        if (!p.is_marker(v)) image[static_cast<std::size_t>(v)] = p.vertex(v).id;
    for (int b : t.neighbours(prime)) {
        if (auto twins = twin_from_leaf_bag(t, b)) return *twins;
        const Bag& leaf_bag = t.bag(b);
        const int center_lv = *leaf_bag.star_center();
        int x = -1;
        for (int v : leaf_bag.ordinary_label_vertices())
            if (v != center_lv) x = leaf_bag.vertex(v).id;
        const int c = leaf_bag.vertex(center_lv).id;
        image[static_cast<std::size_t>(*p.marker_for(t.incident_edges(b).front()))] = c;
        pendants.emplace_back(c, x);
    }

    PrimeCore core;
    Mask core_mask = 0;
    for (int v : image) core_mask |= bit(v);
    auto sub = induced_subgraph(g, core_mask);
    core.core = std::move(sub.graph);
    core.core_ids = std::move(sub.original);
    for (const auto& [c, x] : pendants) {
        const auto at = std::lower_bound(core.core_ids.begin(), core.core_ids.end(), c);
        core.attach.push_back(static_cast<int>(at - core.core_ids.begin()));
        core.pendant_ids.push_back(x);
    }

    for (int u = 0; u < p.size(); ++u)
        for (int w = u + 1; w < p.size(); ++w)
            if (p.label().adjacent(u, w) != g.adjacent(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(w)]))
                throw InvariantError("core map does not carry the prime label onto Q");
    if (!are_isomorphic(core.core, p.label())) throw InvariantError("Q is not isomorphic to the prime label");

    std::vector<int> labeling = core.core_ids;
    labeling.insert(labeling.end(), core.pendant_ids.begin(), core.pendant_ids.end());
    const Graph rebuilt = attach_pendants(core.core, core.attach);
    if (static_cast<int>(labeling.size()) != g.order() || !(relabel(g, labeling) == rebuilt) || !are_isomorphic(rebuilt, g))
        throw InvariantError("Q with its pendants does not rebuild G");
    return core;
}

}  // namespace zfx
