#pragma once
#include "core/graph.hpp"
#include "verify/decomp_pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pdec {

/*
 * Per-condition verdicts. Each named condition keeps its first violation so a
 * failing report pinpoints a witness vertex or edge.
 */
struct ConditionReport {
    struct Item {
        std::string name;
        bool ok = true;
        std::string detail;  // first violation, empty when ok
    };
    std::vector<Item> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
    std::string first_violation() const {
        for (const auto& it : items)
            if (!it.ok) return it.name + ": " + it.detail;
        return {};
    }
};

struct OrderingResult {
    bool found = false;
    std::vector<int> order;    // degeneracy order, earliest first
    std::vector<int> residue;  // nonempty witness when absent
};

// repeated deletion of a minimum-degree vertex (smallest id wins ties);
// succeeds iff each deleted vertex has degree <= d at deletion time
OrderingResult degeneracy_ordering(const PlaneGraph& g, int d);

// orient every edge from the later endpoint to the earlier one
std::vector<std::pair<int, int>> ordering_to_orientation(
    const PlaneGraph& g, const std::vector<int>& order);

struct TopoResult {
    bool acyclic = false;
    std::vector<int> order;  // sinks first, so arcs point later->earlier
    std::vector<int> cycle;  // an explicit directed cycle when cyclic
};

TopoResult orientation_to_ordering(int n, const std::vector<std::pair<int, int>>& arcs);

// exact partition of E(g), D acyclic with max out-degree <= d, Delta(H) <= h
ConditionReport check_dh(const PlaneGraph& g, const DecompPair& p, int d, int h);

/*
 * Condition checkers for the rooted boundary decompositions. Both validate
 * the root contract (throwing GraphError on a malformed root), the exact
 * partition and acyclicity, then the numbered degree conditions.
 */
ConditionReport check_26(const NearTriangulation& t, int x, int y, int z,
                         const DecompPair& p);

ConditionReport check_32(const NearTriangulation& t, int x, int y, int z,
                         std::optional<int> zp, const DecompPair& p);

// drop arcs and hedges whose edge is absent from g
DecompPair restrict_pair(const DecompPair& p, const PlaneGraph& g);

// counting bound: stellations of n-vertex triangulations cannot split into a
// 2-degenerate part plus a part of maximum degree 3 once 3n < 4n-10
bool infeasibility_bound_23(long long n);

} // namespace pdec
