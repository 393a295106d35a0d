#include "zfx/extremal.hpp"

#include <algorithm>

#include "zfx/errors.hpp"
#include "zfx/graph6.hpp"

namespace zfx {

Count path_zprime(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binomial(n - k - 1, k);
}

Count path_z(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binomial(n, k) - path_zprime(n, k);
}

PathProfile path_profile(int n) {
    PathProfile p;
    p.n = n;
    for (int k = 0; k <= n; ++k) {
        p.zprime.push_back(path_zprime(n, k));
        p.z.push_back(path_z(n, k));
    }
    return p;
}

ExtremalVerdict compare_with_path(const ZfProfile& profile, std::string graph_id) {
    ExtremalVerdict v;
    v.graph_id = std::move(graph_id);
    v.certificate = Certificate::enumeration;
    const int n = profile.n;
    for (int k = 0; k <= n; ++k) {
        const auto diff = static_cast<std::int64_t>(profile.zprime_at(k)) - static_cast<std::int64_t>(path_zprime(n, k));
        v.margin.push_back(diff);
        if (diff < 0 && !v.witness_k) v.witness_k = k;
    }
    v.is_path_extremal = !v.witness_k.has_value();
    return v;
}

ExtremalVerdict check_path_extremal(const Graph& g, const ProfileOptions& options) {
    return compare_with_path(zf_profile(g, options), write_graph6(g));
}

std::optional<ExtremalVerdict> twin_shortcut(const Graph& g) {
    const auto twins = find_twin_pair(g);
    if (!twins) return std::nullopt;
    const int n = g.order();
    ExtremalVerdict v;
    v.graph_id = write_graph6(g);
    v.certificate = Certificate::twin_fort;
    for (int k = 0; k <= n; ++k) {
        // k = 0: both sides are 1 (n >= 2). k >= 1: n-2 >= n-k-1.
        const auto bound = static_cast<std::int64_t>(binomial(n - 2, k)) - static_cast<std::int64_t>(path_zprime(n, k));
        if (bound < 0) throw InvariantError("fort bound below the path value at k=" + std::to_string(k));
        v.margin.push_back(bound);
    }
    v.is_path_extremal = true;
    return v;
}

bool LeafRecurrenceAudit::holds() const {
    return std::all_of(rows.begin(), rows.end(), [](const LeafRecurrenceRow& r) { return r.holds; });
}

bool LeafRecurrenceAudit::tight() const {
    return std::all_of(rows.begin(), rows.end(), [](const LeafRecurrenceRow& r) { return r.tight; });
}

LeafRecurrenceAudit audit_leaf_recurrence(const Graph& g, int leaf, const ProfileOptions& options) {
    if (leaf < 0 || leaf >= g.order() || g.degree(leaf) != 1)
        throw DomainError("vertex " + std::to_string(leaf) + " is not a leaf");
    LeafRecurrenceAudit audit;
    audit.leaf = leaf;
    audit.support = lowest_vertex(g.row(leaf));

    const auto whole = zf_profile(g, options);
    const auto without_leaf = zf_profile(remove_vertices(g, bit(leaf)), options);
    const auto without_both = zf_profile(remove_vertices(g, bit(leaf) | bit(audit.support)), options);

    for (int k = 1; k <= g.order(); ++k) {
        LeafRecurrenceRow row;
        row.k = k;
        row.whole = whole.zprime_at(k);
        row.without_leaf = without_leaf.zprime_at(k);
        row.without_both = without_both.zprime_at(k - 1);
        row.holds = row.whole >= row.without_leaf + row.without_both;
        row.tight = row.whole == row.without_leaf + row.without_both;
        audit.rows.push_back(row);
    }
    return audit;
}

Graph attach_pendants(const Graph& q, std::span<const int> attach) {
    GraphBuilder b(q);
    for (int target : attach) {
        if (target < 0 || target >= q.order())
            throw DomainError("pendant target " + std::to_string(target) + " is not a vertex of the core");
        const int x = b.add_vertex();
        b.add_edge(x, target);
    }
    return b.build();
}

PendantExtensionResult check_pendant_extension(const Graph& q, std::span<const int> attach,
                                               const ProfileOptions& options) {
    PendantExtensionResult result;
    result.graph = attach_pendants(q, attach);

    std::optional<ExtremalVerdict> shortcut;
    for (std::size_t i = 0; i < attach.size() && !result.shortcut_twins; ++i) {
        for (std::size_t j = i + 1; j < attach.size(); ++j) {
            if (attach[i] != attach[j]) continue;
            const int u = q.order() + static_cast<int>(i);
            const int w = q.order() + static_cast<int>(j);
            if (twin_kind(result.graph, u, w) != TwinKind::false_twins)
                throw InvariantError("pendants on one vertex are not false twins");
            result.shortcut_twins = TwinPair{u, w, TwinKind::false_twins};
            shortcut = twin_shortcut(result.graph);
            break;
        }
    }

    if (result.graph.order() <= options.max_vertices) {
        result.verdict = check_path_extremal(result.graph, options);
        if (shortcut) {
            if (!result.verdict.is_path_extremal)
                throw InvariantError("twin certificate contradicts enumeration for " + result.verdict.graph_id);
            for (std::size_t k = 0; k < shortcut->margin.size(); ++k)
                if (shortcut->margin[k] > result.verdict.margin[k])
                    throw InvariantError("twin bound exceeds the exact margin for " + result.verdict.graph_id);
            result.cross_checked = true;
        }
    } else if (shortcut) {
        result.verdict = *shortcut;
    } else {
        throw CapacityError("pendant extension on " + std::to_string(result.graph.order()) +
                            " vertices exceeds the subset budget and has no twin certificate");
    }
    return result;
}

}  // namespace zfx
