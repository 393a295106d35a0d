#include "campaign/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "campaign/parallel.hpp"
#include "zfx/decompose.hpp"
#include "zfx/dh.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/graph6.hpp"
#include "zfx/isomorphism.hpp"
#include "zfx/prime_core.hpp"

namespace zfx::campaign {

namespace {

using Clock = std::chrono::steady_clock;

nlohmann::ordered_json base_parameters(const RunOptions& options) {
    return {{"budget_subsets", options.budgets.subsets},
            {"budget_splits", options.budgets.splits},
            {"jobs", options.jobs}};
}

VerificationReport run(const std::string& name, const CorpusDescriptor& descriptor, const std::vector<Graph>& graphs,
                       int jobs, const std::function<Outcome(const Graph&)>& check) {
    const auto start = Clock::now();
    VerificationReport report;
    report.campaign = name;
    report.corpus = descriptor;
    for (const auto& outcome : parallel_map(graphs, jobs, check)) absorb(report, outcome);
    normalize(report);
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

std::vector<std::int64_t> signed_margins(const std::vector<Count>& lhs, const std::vector<Count>& rhs) {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < lhs.size(); ++k)
        out.push_back(static_cast<std::int64_t>(lhs[k]) - static_cast<std::int64_t>(k < rhs.size() ? rhs[k] : 0));
    return out;
}

// Path-extremality by exact enumeration inside the budget, by the twin fort bound beyond it.
Outcome check_extremal(const Graph& g, const std::string& id, const Budgets& budgets) {
    Outcome o;
    std::optional<ExtremalVerdict> verdict;
    if (g.order() <= budgets.subsets) {
        verdict = check_path_extremal(g, {.max_vertices = budgets.subsets, .memo_limit = std::min(budgets.subsets, 20)});
        ++o.tallies["certificate.enumeration"];
    } else if ((verdict = twin_shortcut(g))) {
        ++o.tallies["certificate.twin_fort"];
    } else {
        return Outcome::skip("over_subset_budget");
    }
    if (verdict->is_path_extremal) return o;
    auto tallies = std::move(o.tallies);
    o = Outcome::fail({id, verdict->witness_k, verdict->margin, "z(G;k) exceeds the path count"});
    o.tallies = std::move(tallies);
    return o;
}

std::string hex_mask(Mask m) {
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

}  // namespace

CampaignDocument verify_dh(const Corpus& corpus, const RunOptions& options) {
    CampaignDocument doc;
    doc.campaign = "dh_extremal";
    doc.parameters = base_parameters(options);
    doc.parameters["n_max"] = corpus.descriptor.n_max;

    auto check = [&](const Graph& g) {
        const std::string id = write_graph6(g);
        if (g.order() == 0 || !is_connected(g)) return Outcome::skip("disconnected");

        Outcome o;
        const auto trace = recognize_dh(g);
        const bool greedy = trace.has_value();
        if (greedy && !(replay_trace(*trace) == g)) o.anomalies.push_back({id, "elimination trace does not replay to the input"});

        std::optional<bool> by_split;
        if (g.order() <= options.budgets.splits)
            by_split = summarize(decompose(g, {.split = {.max_vertices = options.budgets.splits}})).is_dh;
        std::optional<bool> by_metric;
        if (g.order() <= kMaxMetricOracleOrder) by_metric = dh_metric_oracle(g);

        if ((by_split && *by_split != greedy) || (by_metric && *by_metric != greedy)) {
            o.anomalies.push_back({id, "DH recognisers disagree"});
            auto skipped = Outcome::skip("recognizer_disagreement");
            skipped.anomalies = std::move(o.anomalies);
            return skipped;
        }
        if (!greedy) {
            auto skipped = Outcome::skip("not_distance_hereditary");
            skipped.anomalies = std::move(o.anomalies);
            return skipped;
        }
        auto result = check_extremal(g, id, options.budgets);
        result.anomalies = std::move(o.anomalies);
        if (by_metric) ++result.tallies["recognizers.metric_oracle"];
        if (by_split) ++result.tallies["recognizers.split_decomposition"];
        return result;
    };

    auto descriptor = corpus.descriptor;
    descriptor.filters.push_back("distance_hereditary");
    doc.reports.push_back(run("dh_extremal", descriptor, corpus.graphs, options.jobs, check));
    return doc;
}

CampaignDocument verify_unique_prime(const Corpus& corpus, int m, const RunOptions& options) {
    CampaignDocument doc;
    doc.campaign = "unique_prime_extremal";
    doc.parameters = base_parameters(options);
    doc.parameters["n_max"] = corpus.descriptor.n_max;
    doc.parameters["m"] = m;

    // Phase 1: the hypothesis on every split-prime H with at most m vertices.
    Corpus primes;
    primes.descriptor = {"enumeration", 1, m, {"connected", "split_prime"}};
    long candidates = 0;
    for (int n = 1; n <= m; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) {
            ++candidates;
            if (is_split_prime(g, {.max_vertices = options.budgets.splits})) primes.graphs.push_back(g);
        }

    auto hypothesis = [&](const Graph& h) {
        const std::string id = write_graph6(h);
        Outcome o;
        for (Mask keep = 1; keep <= h.vertex_mask(); ++keep) {
            const Graph sub = induced_subgraph(h, keep).graph;
            const auto verdict = check_path_extremal(sub, {.max_vertices = options.budgets.subsets});
            ++o.tallies["induced_subgraphs"];
            if (!verdict.is_path_extremal)
                return Outcome::fail({id, verdict.witness_k, verdict.margin,
                                      "induced subgraph " + write_graph6(sub) + " on " + hex_mask(keep) + " is not path-extremal"});
        }
        return o;
    };
    auto phase1 = run("unique_prime_extremal.phase1_hypothesis", primes.descriptor, primes.graphs, options.jobs, hypothesis);
    phase1.tallies["connected_candidates"] = candidates;
    doc.reports.push_back(std::move(phase1));

    // Phase 2: the conclusion on graphs whose only prime bag has at most m vertices.
    auto conclusion = [&](const Graph& g) {
        const std::string id = write_graph6(g);
        if (g.order() == 0 || !is_connected(g)) return Outcome::skip("disconnected");
        if (g.order() > options.budgets.splits) return Outcome::skip("over_split_budget");
        const auto summary = summarize(decompose(g, {.split = {.max_vertices = options.budgets.splits}}));
        if (summary.prime_bag_count == 0) return Outcome::skip("no_prime_bag");
        if (summary.prime_bag_count > 1) return Outcome::skip("several_prime_bags");
        if (summary.prime_labels.front().order() > m) return Outcome::skip("prime_bag_larger_than_m");
        auto o = check_extremal(g, id, options.budgets);
        ++o.tallies["prime_size_" + std::to_string(summary.prime_labels.front().order())];
        return o;
    };
    auto descriptor = corpus.descriptor;
    descriptor.filters.push_back("unique_prime_bag_at_most_" + std::to_string(m));
    doc.reports.push_back(run("unique_prime_extremal.phase2_conclusion", descriptor, corpus.graphs, options.jobs, conclusion));
    return doc;
}

namespace {

Outcome audit_leaves(const Graph& g, const Budgets& budgets) {
    const std::string id = write_graph6(g);
    if (g.order() > budgets.subsets) return Outcome::skip("over_subset_budget");
    Outcome o;
    for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) != 1) continue;
        const auto audit = audit_leaf_recurrence(g, x, {.max_vertices = budgets.subsets});
        ++o.tallies["leaves"];
        if (audit.tight()) ++o.tallies["tight_leaves"];
        if (audit.holds()) continue;
        std::vector<std::int64_t> margins;
        std::optional<int> witness;
        for (const auto& row : audit.rows) {
            margins.push_back(static_cast<std::int64_t>(row.whole) - static_cast<std::int64_t>(row.without_leaf) -
                              static_cast<std::int64_t>(row.without_both));
            if (!row.holds && !witness) witness = row.k;
        }
        return Outcome::fail({id, witness, margins, "leaf " + std::to_string(x) + " breaks the recurrence"});
    }
    if (o.tallies.empty()) return Outcome::skip("no_leaf");
    return o;
}

Outcome audit_forts(const Graph& g) {
    const std::string id = write_graph6(g);
    const int n = g.order();
    Outcome o;
    const auto profile = zf_profile(g);
    for (Mask f = 1; f <= g.vertex_mask(); ++f) {
        if (!is_fort(g, VertexSet(f, n))) continue;
        ++o.tallies["forts"];
        const Mask outside = g.vertex_mask() & ~f;
        // Every subset of the complement, including the empty set, must fail to force.
        for (Mask s = outside;; s = (s - 1) & outside) {
            if (is_forcing_mask(g, s))
                return Outcome::fail({id, popcount(s), {},
                                      "set " + hex_mask(s) + " avoids fort " + hex_mask(f) + " but forces"});
            if (s == 0) break;
        }
        const auto floor = fort_avoidance_floor(g, VertexSet(f, n));
        for (int k = 0; k <= n; ++k)
            if (profile.zprime_at(k) < floor[static_cast<std::size_t>(k)])
                return Outcome::fail({id, k, signed_margins(profile.zprime, floor), "fort " + hex_mask(f) + " floor exceeds z'"});
    }
    return o;
}

Outcome audit_twins(const Graph& g) {
    const std::string id = write_graph6(g);
    const int n = g.order();
    Outcome o;
    std::optional<ZfProfile> profile;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!twin_kind(g, u, v)) continue;
            ++o.tallies["twin_pairs"];
            if (!is_fort(g, VertexSet(bit(u) | bit(v), n)))
                return Outcome::fail({id, std::nullopt, {}, "twins " + std::to_string(u) + "," + std::to_string(v) + " are not a fort"});
            if (!profile) profile = zf_profile(g);
            std::vector<Count> floor;
            for (int k = 0; k <= n; ++k) floor.push_back(binomial(n - 2, k));
            for (int k = 0; k <= n; ++k)
                if (profile->zprime_at(k) < floor[static_cast<std::size_t>(k)])
                    return Outcome::fail({id, k, signed_margins(profile->zprime, floor), "z'(G;k) below C(n-2,k)"});
        }
    if (o.tallies.empty()) return Outcome::skip("no_twin_pair");
    return o;
}

// Replays the induction on a unique-prime tree: a twin ends a branch, a star centered at the
// prime bag is reduced to its core, and otherwise the far leaf bag is peeled and both results
// are followed. Every peelable leaf bag along the way is peeled once as a check.
void walk_prime_tree(const GraphLabelledTree& t, std::map<std::string, long>& tallies) {
    const auto summary = summarize(t);
    if (summary.star_centered_at_prime) {
        const auto result = extract_prime_core(t);
        ++tallies[std::holds_alternative<TwinPair>(result) ? "core_twin_exits" : "cores"];
        return;
    }
    const int prime = *summary.unique_prime;
    for (int b = 0; b < t.bag_count(); ++b) {
        if (b == prime || !t.is_leaf_bag(b)) continue;
        const auto cls = classify_leaf_bag(t, b);
        if (cls.kind != LeafBagKind::star_leaf_attached || cls.ordinary_leaf_count != 1) continue;
        if (t.bag(t.other_end(cls.edge, b)).kind() == BagKind::prime) continue;
        peel(t, b);
        ++tallies["peels"];
    }
    const int far = *pick_peelable_bag(t);
    if (twin_from_leaf_bag(t, far)) {
        ++tallies["twin_exits"];
        return;
    }
    const auto peeled = peel(t, far);
    walk_prime_tree(peeled.without_leaf, tallies);
    walk_prime_tree(peeled.without_leaf_and_center, tallies);
}

Outcome audit_prime(const Graph& g, const Budgets& budgets) {
    const std::string id = write_graph6(g);
    if (g.order() > budgets.splits) return Outcome::skip("over_split_budget");
    const auto t = decompose(g, {.split = {.max_vertices = budgets.splits}});
    if (!summarize(t).unique_prime) return Outcome::skip("not_unique_prime");
    Outcome o;
    try {
        walk_prime_tree(t, o.tallies);
    } catch (const InvariantError& e) {
        return Outcome::fail({id, std::nullopt, {}, e.what()});
    }
    return o;
}

}  // namespace

CampaignDocument audit_lemmas(const AuditLimits& limits, const RunOptions& options) {
    CampaignDocument doc;
    doc.campaign = "lemma_audits";
    doc.parameters = base_parameters(options);
    doc.parameters["leaf_nmax"] = limits.leaf_nmax;
    doc.parameters["fort_nmax"] = limits.fort_nmax;
    doc.parameters["twin_nmax"] = limits.twin_nmax;
    doc.parameters["prime_nmax"] = limits.prime_nmax;

    const auto leaf_corpus = enumerated_corpus(2, limits.leaf_nmax, true);
    doc.reports.push_back(run("lemma_audits.leaf_recurrence", leaf_corpus.descriptor, leaf_corpus.graphs, options.jobs,
                              [&](const Graph& g) { return audit_leaves(g, options.budgets); }));

    const auto fort_corpus = enumerated_corpus(1, limits.fort_nmax, false);
    doc.reports.push_back(run("lemma_audits.fort_avoidance", fort_corpus.descriptor, fort_corpus.graphs, options.jobs, audit_forts));

    const auto twin_corpus = enumerated_corpus(2, limits.twin_nmax, false);
    doc.reports.push_back(run("lemma_audits.twin_fort", twin_corpus.descriptor, twin_corpus.graphs, options.jobs, audit_twins));

    auto prime_corpus = enumerated_corpus(5, limits.prime_nmax, true);
    prime_corpus.descriptor.filters.push_back("unique_prime_bag");
    doc.reports.push_back(run("lemma_audits.prime_induction", prime_corpus.descriptor, prime_corpus.graphs, options.jobs,
                              [&](const Graph& g) { return audit_prime(g, options.budgets); }));
    return doc;
}

namespace {

std::vector<std::string> split_problems(const Graph& g, const Budgets& budgets, std::map<std::string, long>& tallies) {
    std::vector<std::string> problems;
    const SplitOptions least{.max_vertices = budgets.splits, .order = SplitOrder::least_first};
    const SplitOptions greatest{.max_vertices = budgets.splits, .order = SplitOrder::greatest_first};

    if (const auto s = find_split(g, least); s && !is_split(g, *s)) problems.push_back("find_split returned a non-split");

    const auto t = decompose(g, {.split = least});
    if (!(reconstruct(t) == g)) problems.push_back("reconstruction differs from the input");
    for (const auto& v : validate_reduced(t)) problems.push_back("not reduced: " + to_string(v.kind) + " " + v.detail);

    const auto summary = summarize(t);
    const bool greedy = recognize_dh(g).has_value();
    if (summary.is_dh != greedy) problems.push_back("prime-free decomposition disagrees with greedy elimination");
    if (g.order() <= kMaxMetricOracleOrder) {
        ++tallies["metric_oracle_checked"];
        if (summary.is_dh != dh_metric_oracle(g)) problems.push_back("prime-free decomposition disagrees with the metric oracle");
    }
    ++tallies[summary.is_dh ? "prime_free" : "with_prime_bags"];

    // The other split order must give the same bag kinds and the same prime labels.
    const auto other = decompose(g, {.split = greatest});
    if (!(reconstruct(other) == g)) problems.push_back("reconstruction differs under the greatest-first split order");
    auto kinds = [](const GraphLabelledTree& x) {
        std::vector<std::pair<int, int>> out;
        for (const Bag& b : x.bags()) out.emplace_back(static_cast<int>(b.kind()), b.size());
        std::sort(out.begin(), out.end());
        return out;
    };
    if (kinds(t) != kinds(other)) problems.push_back("bag kinds depend on the split order");
    auto primes = summary.prime_labels;
    for (const Graph& p : summarize(other).prime_labels) {
        const auto match = std::find_if(primes.begin(), primes.end(), [&](const Graph& q) { return are_isomorphic(p, q); });
        if (match == primes.end()) {
            problems.push_back("prime labels depend on the split order");
            break;
        }
        primes.erase(match);
    }
    return problems;
}

}  // namespace

CampaignDocument verify_split(const Corpus& corpus, const RunOptions& options) {
    CampaignDocument doc;
    doc.campaign = "split_decomposition";
    doc.parameters = base_parameters(options);
    doc.parameters["n_max"] = corpus.descriptor.n_max;

    auto check = [&](const Graph& g) {
        const std::string id = write_graph6(g);
        if (g.order() == 0 || !is_connected(g)) return Outcome::skip("disconnected");
        if (g.order() > options.budgets.splits) return Outcome::skip("over_split_budget");
        Outcome o;
        const auto problems = split_problems(g, options.budgets, o.tallies);
        if (problems.empty()) return o;
        std::string note = problems.front();
        for (std::size_t i = 1; i < problems.size(); ++i) note += "; " + problems[i];
        auto failed = Outcome::fail({id, std::nullopt, {}, note});
        failed.tallies = std::move(o.tallies);
        return failed;
    };
    doc.reports.push_back(run("split_decomposition", corpus.descriptor, corpus.graphs, options.jobs, check));
    return doc;
}

}  // namespace zfx::campaign
