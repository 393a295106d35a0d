#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfx/binomial.hpp"
#include "zfx/forcing.hpp"
#include "zfx/graph.hpp"

namespace zfx {

// Non-forcing k-subsets of the n-vertex path: C(n-k-1, k). Zero outside 0..n.
Count path_zprime(int n, int k);
// Forcing k-subsets of the n-vertex path: C(n,k) - C(n-k-1,k). Zero outside 0..n.
Count path_z(int n, int k);

struct PathProfile {
    int n = 0;
    std::vector<Count> zprime;
    std::vector<Count> z;
};

PathProfile path_profile(int n);

enum class Certificate {
    enumeration,  // exact profile compared against the path
    twin_fort,    // twin pair fort bound; margins are lower bounds
};

struct ExtremalVerdict {
    std::string graph_id;  // graph6 of the checked graph
    bool is_path_extremal = true;
    std::optional<int> witness_k;       // least k with z(G;k) > z(P_n;k)
    std::vector<std::int64_t> margin;   // margin[k] = z'(G;k) - z'(P_n;k), k = 0..n
    Certificate certificate = Certificate::enumeration;
};

ExtremalVerdict compare_with_path(const ZfProfile& profile, std::string graph_id = {});
ExtremalVerdict check_path_extremal(const Graph& g, const ProfileOptions& options = {});

// A twin pair {u,v} is a fort, so z'(G;k) >= C(n-2,k) >= C(n-k-1,k) for k >= 1.
// Returns a verdict without enumerating subsets, or nullopt when g has no twin pair.
std::optional<ExtremalVerdict> twin_shortcut(const Graph& g);

struct LeafRecurrenceRow {
    int k = 0;
    Count whole = 0;              // z'(G;k)
    Count without_leaf = 0;       // z'(G-x;k)
    Count without_both = 0;       // z'(G-{x,v};k-1)
    bool holds = true;
    bool tight = false;
};

struct LeafRecurrenceAudit {
    int leaf = -1;
    int support = -1;
    std::vector<LeafRecurrenceRow> rows;  // k = 1..n

    bool holds() const;
    bool tight() const;
};

// z'(G;k) >= z'(G-x;k) + z'(G-{x,v};k-1) for every k >= 1, with v the unique neighbour of x.
// Throws DomainError if x is not a leaf.
LeafRecurrenceAudit audit_leaf_recurrence(const Graph& g, int leaf, const ProfileOptions& options = {});

// q plus one new pendant vertex per entry of attach, appended in order as vertices q.order(), ...
Graph attach_pendants(const Graph& q, std::span<const int> attach);

struct PendantExtensionResult {
    Graph graph;
    ExtremalVerdict verdict;
    std::optional<TwinPair> shortcut_twins;  // two pendants on one vertex
    bool cross_checked = false;              // shortcut and enumeration both ran and agree
};

// Builds the pendant extension and checks it. When two pendants share a vertex they are
// false twins and the twin certificate applies; when the graph is also within budget the
// certificate is cross-checked against enumeration (a disagreement throws InvariantError).
PendantExtensionResult check_pendant_extension(const Graph& q, std::span<const int> attach,
                                               const ProfileOptions& options = {});

}  // namespace zfx
