#pragma once
#include "core/graph.hpp"
#include "verify/decomp_pair.hpp"

#include <cstdint>

namespace pdec {

/*
 * Exact decision procedure for splitting an edge set into an acyclically
 * orientable part of bounded out-degree (equivalently, a d-degenerate part)
 * and a part of bounded maximum degree. Desk-scale instances only; the search
 * is exponential and guarded by a node budget.
 */
struct OracleOptions {
    bool exhaustive = false;   // enumerate every bipartition, no pruning
    bool prune_hcap = true;    // cut H branches that overload an endpoint
    bool prune_count = true;   // edge-count bound for d-degenerate graphs
    bool prune_peel = true;    // cut when the partial D-part has a (d+1)-core
    long long node_budget = 400'000'000;
    int workers = 1;
    int exhaustive_edge_cap = 40;
};

struct OracleResult {
    bool feasible = false;
    DecompPair witness;  // passes check_dh when feasible
    long long nodes = 0; // search tree size; stable only for workers == 1
};

// throws BudgetExceeded when the node budget or the exhaustive edge cap is hit
OracleResult exact_decide(const PlaneGraph& g, int d, int h,
                          const OracleOptions& opt = {});

struct MinHResult {
    int h = -1;
    DecompPair witness;
    long long nodes_total = 0;
    long long nodes_refute = 0;  // spent proving h-1 infeasible (0 when h == 0)
};

// smallest h for which exact_decide(g, d, h) is feasible
MinHResult min_h(const PlaneGraph& g, int d, const OracleOptions& opt = {});

} // namespace pdec
