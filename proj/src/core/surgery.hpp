#pragma once
#include "core/graph.hpp"

#include <utility>
#include <vector>

namespace pdec {

/*
 * Value-returning surgery on near triangulations. Results keep the original
 * vertex ids; vertices cut away by an operation are left isolated (degree 0)
 * and are ignored by the validation of the edged part. Fresh vertices get ids
 * above the previous maximum.
 */

// outer walk as traced (counterclockwise)
const std::vector<int>& boundary_cycle(const NearTriangulation& t);

// edges between non-consecutive boundary vertices, sorted as (min,max) pairs
std::vector<std::pair<int, int>> find_chords(const NearTriangulation& t);

// number of members of {x,y} that are cycle neighbors of w on the outer face
int b_value(const NearTriangulation& t, int x, int y, int w);

// The two closed sides of chord uv. first = the side whose boundary contains
// the directed outer edge (outer[0], outer[1]); both sides keep the chord.
std::pair<NearTriangulation, NearTriangulation>
split_at_chord(const NearTriangulation& t, int u, int v);

// delete z from the boundary; the exposed neighbors join the outer walk
NearTriangulation remove_boundary_vertex(const NearTriangulation& t, int z);

// new vertex inside the face, joined to the distinct walk vertices
PlaneGraph insert_apex(const PlaneGraph& g, const Face& f, int* new_id = nullptr);

// maximal 2-connected piece of t minus `removed` that contains `anchor`;
// the new outer face is the orbit holding the surviving old outer edges
NearTriangulation block_containing(const NearTriangulation& t,
                                   const std::vector<int>& removed, int anchor);

struct TriangulateResult {
    NearTriangulation tri;
    int orig_n = 0;                              // input vertices are 1..orig_n
    std::vector<std::pair<int, int>> added_edges;  // connector and apex edges
};

/*
 * Embed any nonempty planar graph into a near triangulation: connect the
 * components, then repeatedly insert an apex into the first face whose walk
 * is not a strict triangle. The outer face of the result is the face with the
 * lexicographically smallest sorted vertex triple (tie: the walk that is
 * smallest when started at its smallest vertex).
 */
TriangulateResult triangulate(const PlaneGraph& g);

// outer-face rule shared by triangulate and the generators; g must have all
// faces strict triangles
std::vector<int> canonical_outer_triangle(const PlaneGraph& g);

} // namespace pdec
