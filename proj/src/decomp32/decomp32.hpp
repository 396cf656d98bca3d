#pragma once
#include "core/surgery.hpp"
#include "verify/decomp_pair.hpp"

#include <optional>

namespace pdec {

struct Decomp32Options {
    // re-run the full condition checker on every recursion level's result
    bool paranoid = false;
};

// Smallest-id boundary vertex outside {x,y} that no chord touches.
// Such a vertex always exists on a near triangulation; throws GraphError
// when xy is not a boundary edge.
int choose_z(const NearTriangulation& t, int x, int y);

// Decompose t into an acyclic orientation D with max out-degree 3 and a
// subgraph H with max degree 2, steered by the rooted boundary contract:
// xy a boundary edge, z a boundary vertex not incident to any chord, and
// z' a boundary neighbor of z (required exactly when neither x nor y is
// one).  The result satisfies check_32 for the same roots.
DecompPair decompose32(const NearTriangulation& t, int x, int y, int z,
                       std::optional<int> zp = std::nullopt,
                       const Decomp32Options& opt = {});

} // namespace pdec
