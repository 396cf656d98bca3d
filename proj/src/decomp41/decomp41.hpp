#pragma once
#include "core/graph.hpp"
#include "verify/decomp_pair.hpp"

#include <vector>

namespace pdec {

/*
 * Local patterns in a plane triangulation whose deletion shrinks the graph
 * and over which a (4,1)-decomposition extends back: a couple of edges join
 * the matching and the deleted vertices are appended to the degeneracy
 * order. "Consecutive" means consecutive in the rotation around the center.
 */
enum class ConfigKind {
    low_vertex,   // a vertex of degree at most 4
    five_pair,    // two adjacent 5-vertices
    five_fan,     // a 5-vertex with three consecutive 6--neighbors
    five_wheel,   // a 5-vertex whose neighbor degrees read 6,6,7,6,7 around it
    seven_fan,    // a 7-vertex with consecutive neighbors of degrees 5,6,5
};

const char* config_kind_name(ConfigKind k);

/*
 * vertices holds the named vertices, center first:
 *   low_vertex  {v}
 *   five_pair   {u, v}            u,v adjacent, both degree 5
 *   five_fan    {v, u1, u2, u3}   u1,u2,u3 consecutive around v, degrees <= 6
 *   five_wheel  {v, u1, .., u5}   all of N(v) in rotation order; u3,u5 are the
 *                                 7-vertices, u1,u2,u4 the 6-vertices
 *   seven_fan   {v, u1, u2, u3}   consecutive around v; deg u1 = deg u3 = 5,
 *                                 deg u2 = 6
 */
struct ReducibleConfig {
    ConfigKind kind;
    std::vector<int> vertices;
};

/*
 * Vertex charges before and after the transfer rule: every vertex starts at
 * deg(v) - 6, then each vertex of degree >= 6 with at least one 5-neighbor
 * splits its initial charge evenly among its 5-neighbors. Finals are exact
 * fractions in lowest terms (denominators positive). The charge sum is
 * invariant and equals 2|E| - 6n = -12 on a triangulation, so the state
 * where every final charge is nonnegative cannot occur; all_final_nonneg
 * reports it anyway as the audit's contradiction flag.
 */
struct ChargeTable {
    int n = 0;
    std::vector<int> initial;  // index 1..n, deg - 6
    std::vector<int> d5;       // number of degree-5 neighbors
    std::vector<long long> final_num;
    std::vector<long long> final_den;
    long long total = 0;  // = sum of initial = exact sum of final
    bool all_final_nonneg = false;
};

struct Decomp41Options {
    // re-run check_dh on every recursion level's restricted graph
    bool paranoid = false;
};

struct Decomp41Result {
    DecompPair pair;          // arcs point from later to earlier in order
    std::vector<int> order;   // 4-degenerate ordering of D, earliest first
};

// Smallest pattern in scan order low_vertex -> seven_fan, ties broken by
// center id, then by first matching rotation offset. Every triangulation
// contains one; a scan miss is the internal "discharging contradiction".
ReducibleConfig find_reducible(const PlaneGraph& t);

// Split the edges of a simple planar graph into a matching (hedges) and an
// acyclic orientation with out-degree at most 4 (arcs), together with the
// order certifying 4-degeneracy. Vertices of degree <= 4 are peeled off
// directly (smallest id first); once every remaining degree is >= 5 the
// graph is completed to a triangulation by edges alone, the first reducible
// pattern is deleted, and the decomposition extends back over it. Edges
// added by the completion are dropped from the result.
Decomp41Result decompose41(const PlaneGraph& g, const Decomp41Options& opt = {});

// The charge table of a triangulation; PDEC_CHECKs conservation, and when
// no two 5-vertices are adjacent also d5(v) <= deg(v)/2 for every v.
ChargeTable discharge_audit(const PlaneGraph& t);

// Add edges to a simple planar graph (n >= 3) until every face is a
// triangle, keeping it simple and plane: bridges connect the components,
// faces that repeat a vertex get a chord between two of the repeat's walk
// successors, and each remaining long face is fanned from a corner that has
// no prior chord into the face. Returns the list of added edges.
std::vector<std::pair<int, int>> fill_to_triangulation(PlaneGraph& g);

} // namespace pdec
