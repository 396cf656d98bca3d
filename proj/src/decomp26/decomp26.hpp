#pragma once
#include "core/surgery.hpp"
#include "verify/decomp_pair.hpp"

#include <vector>

namespace pdec {

struct Decomp26Options {
    // re-run the full condition checker on every recursion level's result
    bool paranoid = false;
};

/*
 * Fan layout used when the boundary has no usable chord and the far root z
 * touches neither x nor y along the boundary. path_p is the stretch of the
 * outer cycle from y's far boundary neighbor up to z; block is the
 * 2-connected piece of t - path_p that keeps x and y, and path_q walks its
 * boundary from y to z's surviving boundary neighbor. markers are the inner
 * path_q vertices with at least two neighbors on the stretch; bridges has one
 * entry per consecutive pair of (y, markers..., path_q.back()), the unique
 * stretch vertex both of them touch, ending in z itself. strips[i] is the
 * sub-triangulation enclosed by markers[i] together with its bridge bracket.
 */
struct FanStructure {
    std::vector<int> path_p;
    std::vector<int> path_q;
    std::vector<int> markers;
    std::vector<int> bridges;  // markers.size() + 1 entries
    NearTriangulation block;
    std::vector<NearTriangulation> strips;  // one per marker
};

// Decompose t into an acyclic orientation D with max out-degree 2 and a
// subgraph H with max degree 6, steered by the rooted boundary contract:
// xy a boundary edge and z any other boundary vertex. The result satisfies
// check_26 for the same roots: boundary degrees are capped tighter, y ends
// clean, x keeps at most the arc to y plus one H edge, and z stays under the
// 4 - b cap.
DecompPair decompose26(const NearTriangulation& t, int x, int y, int z,
                       const Decomp26Options& opt = {});

// Turn a pair valid for the root (x,y,z) into one valid for (y,x,z): the
// root arc reverses, and when x carries an H edge its partner trades the
// arc into y for one into x. Throws GraphError when the input fails
// check_26 for (x,y,z).
DecompPair swap_root(const NearTriangulation& t, int x, int y, int z,
                     const DecompPair& p);

// Build the fan layout for the root (x,y,z). Requires the situation the fan
// case handles: boundary length >= 4, no chord separating {x,y} from z or
// touching any of them, z not a boundary neighbor of x or y, and the frame
// orientation that puts the directed edge (y,x) on the traced outer walk
// (otherwise decompose the swapped root instead). Throws GraphError when a
// precondition fails.
FanStructure build_fan(const NearTriangulation& t, int x, int y, int z);

} // namespace pdec
