#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace pdec {

struct GraphError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };
struct InternalError : std::logic_error { using std::logic_error::logic_error; };
struct BudgetExceeded : std::runtime_error { using std::runtime_error::runtime_error; };

[[noreturn]] void internal_fail(const char* cond, const char* file, int line,
                                const std::string& msg);

/* Invariant checks that guard the constructive proof steps. Always on. */
#define PDEC_CHECK(cond, msg) \
    do { if (!(cond)) ::pdec::internal_fail(#cond, __FILE__, __LINE__, (msg)); } while (0)

/*
 * Combinatorial plane graph. Vertex ids are dense 1..n; rot[v] lists the
 * neighbors of v in clockwise order around v (rot[0] unused). The embedding
 * is purely combinatorial; faces are recovered by orbit tracing.
 */
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> rot;

    PlaneGraph() : rot(1) {}
    explicit PlaneGraph(int n_) : n(n_), rot(n_ + 1) {}

    int degree(int v) const { return (int)rot[v].size(); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;

    // Structural validation: id range, simplicity, rotation symmetry and
    // genus 0 of every edged component (faces = edges - vertices + 2).
    void validate() const;
};

struct Face {
    std::vector<int> walk;  // closed walk, one vertex per step

    bool is_strict_triangle() const {
        return walk.size() == 3 && walk[0] != walk[1] && walk[1] != walk[2] &&
               walk[0] != walk[2];
    }
};

// cyclic predecessor / successor of u inside rotation list r (u must occur)
int rot_pred(const std::vector<int>& r, int u);
int rot_next(const std::vector<int>& r, int u);

/*
 * Face tracing uses the successor rule next(u,v) = (v, pred_{rot(v)}(u)).
 * With clockwise rotations every inner face is traversed clockwise and the
 * outer face is the unique counterclockwise orbit. Faces are reported in
 * discovery order while scanning directed edges (u, rot[u][i]) with u
 * ascending and i in rotation order.
 */
std::vector<Face> trace_faces(const PlaneGraph& g);

// Orbit of the single directed edge (u,v); walk starts u,v,...
Face trace_face_from(const PlaneGraph& g, int u, int v);

bool is_connected(const PlaneGraph& g);

// Connected and every face walk is a strict triangle (sphere triangulation).
bool is_triangulation(const PlaneGraph& g);

/*
 * Plane graph with a designated outer face whose walk is a simple cycle and
 * all of whose other faces are strict triangles. `outer` stores the walk as
 * traced (counterclockwise); clockwise boundary order is the reversal.
 */
struct NearTriangulation {
    PlaneGraph g;
    std::vector<int> outer;

    void validate() const;
};

} // namespace pdec
