#pragma once
#include "core/graph.hpp"
#include "verify/decomp_pair.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace pdec {

// per-vertex degree tallies of a pair, used by the recursion assemblies
struct PairDegrees {
    std::vector<int> outdeg, hdeg;

    PairDegrees(const DecompPair& p, int n) : outdeg(n + 1, 0), hdeg(n + 1, 0) {
        for (auto [u, v] : p.arcs) {
            (void)v;
            outdeg[u]++;
        }
        for (auto [u, v] : p.hedges) {
            hdeg[u]++;
            hdeg[v]++;
        }
    }
};

inline bool has_arc(const DecompPair& p, int u, int v) {
    return std::find(p.arcs.begin(), p.arcs.end(), std::pair{u, v}) != p.arcs.end();
}

inline bool has_hedge(const DecompPair& p, int u, int v) {
    if (u > v) std::swap(u, v);
    return std::find(p.hedges.begin(), p.hedges.end(), std::pair{u, v}) !=
           p.hedges.end();
}

inline void remove_arc(DecompPair& p, int u, int v) {
    auto it = std::find(p.arcs.begin(), p.arcs.end(), std::pair{u, v});
    PDEC_CHECK(it != p.arcs.end(), "expected arc missing from child result");
    p.arcs.erase(it);
}

inline void remove_hedge(DecompPair& p, int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::find(p.hedges.begin(), p.hedges.end(), std::pair{u, v});
    PDEC_CHECK(it != p.hedges.end(), "expected H edge missing from child result");
    p.hedges.erase(it);
}

inline void absorb(DecompPair& into, const DecompPair& from) {
    into.arcs.insert(into.arcs.end(), from.arcs.begin(), from.arcs.end());
    into.hedges.insert(into.hedges.end(), from.hedges.begin(), from.hedges.end());
}

} // namespace pdec
