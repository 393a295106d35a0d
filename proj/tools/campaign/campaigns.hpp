#pragma once

#include "campaign/corpus.hpp"
#include "campaign/report.hpp"

namespace zfx::campaign {

struct Budgets {
    int subsets = 20;  // largest order whose forcing profile is enumerated
    int splits = 24;   // largest order handed to the bipartition split search
};

struct RunOptions {
    Budgets budgets;
    int jobs = 1;
};

// Connected DH graphs (greedy elimination, prime-free decomposition and, up to 8 vertices,
// the metric oracle must agree) checked for path-extremality.
CampaignDocument verify_dh(const Corpus& corpus, const RunOptions& options);

// Phase 1: every induced subgraph of every split-prime graph on at most m vertices is
// path-extremal. Phase 2: every graph of `corpus` with exactly one prime bag, of size at most m,
// is path-extremal.
CampaignDocument verify_unique_prime(const Corpus& corpus, int m, const RunOptions& options);

struct AuditLimits {
    int leaf_nmax = 6;   // leaf recurrence on connected graphs
    int fort_nmax = 5;   // fort avoidance on all graphs
    int twin_nmax = 6;   // twin forts on all graphs
    int prime_nmax = 8;  // peel and core extraction on the unique-prime corpus
};

CampaignDocument audit_lemmas(const AuditLimits& limits, const RunOptions& options);

// Round trip, reducedness, recogniser agreement and split-order independence of decompose.
CampaignDocument verify_split(const Corpus& corpus, const RunOptions& options);

}  // namespace zfx::campaign
