#include "doctest.h"

#include "core/graph.hpp"
#include "core/surgery.hpp"

#include <algorithm>
#include <set>

using namespace pdec;

namespace {

PlaneGraph triangle() {
    PlaneGraph g(3);
    g.rot[1] = {2, 3};
    g.rot[2] = {3, 1};
    g.rot[3] = {1, 2};
    return g;
}

PlaneGraph tetra() {
    PlaneGraph g(4);
    g.rot[1] = {2, 3, 4};
    g.rot[2] = {1, 4, 3};
    g.rot[3] = {1, 2, 4};
    g.rot[4] = {1, 3, 2};
    return g;
}

// 4-cycle 1-2-3-4 with chord 1-3, embedded with 2 and 4 on opposite sides
PlaneGraph diamond() {
    PlaneGraph g(4);
    g.rot[1] = {2, 3, 4};
    g.rot[2] = {3, 1};
    g.rot[3] = {4, 1, 2};
    g.rot[4] = {1, 3};
    return g;
}

int face_count(const PlaneGraph& g) { return (int)trace_faces(g).size(); }

bool same_cycle(std::vector<int> a, std::vector<int> b) {
    if (a.size() != b.size()) return false;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::rotate(b.begin(), it, b.end());
    return a == b;
}

}  // namespace

TEST_CASE("triangle faces and validation") {
    PlaneGraph g = triangle();
    g.validate();
    CHECK(g.edge_count() == 3);
    auto faces = trace_faces(g);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].walk == std::vector<int>{1, 2, 3});
    CHECK(faces[1].walk == std::vector<int>{1, 3, 2});
}

TEST_CASE("tetrahedron is a triangulation") {
    PlaneGraph g = tetra();
    g.validate();
    CHECK(is_triangulation(g));
    CHECK(face_count(g) == 4);
    NearTriangulation t{g, {1, 2, 3}};
    t.validate();
    // {1,3,2} is not an orbit of this embedding
    NearTriangulation bad{g, {1, 3, 2}};
    CHECK_THROWS_AS(bad.validate(), GraphError);
    CHECK(canonical_outer_triangle(g) == std::vector<int>{1, 2, 3});
}

TEST_CASE("validation rejects asymmetric and duplicate rotations") {
    PlaneGraph g(2);
    g.rot[1] = {2};
    CHECK_THROWS_AS(g.validate(), GraphError);
    PlaneGraph h(2);
    h.rot[1] = {2, 2};
    h.rot[2] = {1, 1};
    CHECK_THROWS_AS(h.validate(), GraphError);
}

TEST_CASE("validation rejects a non-planar rotation system") {
    // K5 has no plane embedding, so every rotation choice fails Euler
    PlaneGraph g(5);
    for (int v = 1; v <= 5; ++v)
        for (int u = 1; u <= 5; ++u)
            if (u != v) g.rot[v].push_back(u);
    CHECK_THROWS_AS(g.validate(), GraphError);
}

TEST_CASE("diamond boundary and chord detection") {
    PlaneGraph g = diamond();
    g.validate();
    auto faces = trace_faces(g);
    REQUIRE(faces.size() == 3);
    int outer_len4 = 0;
    for (auto& f : faces) outer_len4 += f.walk.size() == 4;
    CHECK(outer_len4 == 1);

    NearTriangulation t;
    t.g = g;
    for (auto& f : faces)
        if (f.walk.size() == 4) t.outer = f.walk;
    t.validate();
    auto ch = find_chords(t);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0] == std::pair<int, int>{1, 3});

    CHECK(b_value(t, t.outer[0], t.outer[1], t.outer[2]) == 1);
}

TEST_CASE("split at chord returns the two closed sides") {
    PlaneGraph g = diamond();
    auto faces = trace_faces(g);
    NearTriangulation t;
    t.g = g;
    for (auto& f : faces)
        if (f.walk.size() == 4) t.outer = f.walk;
    auto [s1, s2] = split_at_chord(t, 1, 3);
    s1.validate();
    s2.validate();
    CHECK(s1.outer.size() == 3);
    CHECK(s2.outer.size() == 3);
    std::set<int> v1, v2;
    for (int v = 1; v <= 4; ++v) {
        if (s1.g.degree(v)) v1.insert(v);
        if (s2.g.degree(v)) v2.insert(v);
    }
    CHECK(v1 != v2);
    CHECK((v1 == std::set<int>{1, 2, 3} || v1 == std::set<int>{1, 3, 4}));
    CHECK((v2 == std::set<int>{1, 2, 3} || v2 == std::set<int>{1, 3, 4}));
    // the first side carries the directed outer edge (outer[0], outer[1])
    bool found = false;
    for (size_t i = 0; i < s1.outer.size(); ++i)
        if (s1.outer[i] == t.outer[0] &&
            s1.outer[(i + 1) % s1.outer.size()] == t.outer[1])
            found = true;
    CHECK(found);
}

TEST_CASE("remove boundary vertex exposes the interior path") {
    PlaneGraph g = tetra();
    NearTriangulation t{g, {1, 2, 3}};
    NearTriangulation s = remove_boundary_vertex(t, 2);
    CHECK(s.g.degree(2) == 0);
    CHECK(same_cycle(s.outer, {3, 1, 4}));
}

TEST_CASE("insert apex subdivides a triangle") {
    PlaneGraph g = triangle();
    int x = 0;
    PlaneGraph h = insert_apex(g, Face{{1, 3, 2}}, &x);
    CHECK(x == 4);
    h.validate();
    CHECK(is_triangulation(h));
    CHECK(h.rot[4] == std::vector<int>{1, 3, 2});
    CHECK(h.has_edge(4, 1));
    CHECK(h.has_edge(4, 2));
    CHECK(h.has_edge(4, 3));
    // matches the hand-built tetrahedron embedding up to rotation starts
    for (int v = 1; v <= 4; ++v) CHECK(same_cycle(h.rot[v], tetra().rot[v]));
}

TEST_CASE("triangulate connects and fills an arbitrary planar graph") {
    // two disjoint pieces: an edge and an isolated vertex
    PlaneGraph g(3);
    g.rot[1] = {2};
    g.rot[2] = {1};
    auto res = triangulate(g);
    res.tri.validate();
    CHECK(res.orig_n == 3);
    for (auto [a, b] : res.added_edges) CHECK(res.tri.g.has_edge(a, b));
    // every input edge must survive
    CHECK(res.tri.g.has_edge(1, 2));

    // a square becomes a near triangulation containing all four sides
    PlaneGraph sq(4);
    sq.rot[1] = {2, 4};
    sq.rot[2] = {3, 1};
    sq.rot[3] = {4, 2};
    sq.rot[4] = {1, 3};
    auto r2 = triangulate(sq);
    r2.tri.validate();
    for (int i = 1; i <= 4; ++i) CHECK(r2.tri.g.has_edge(i, i % 4 + 1));
}

TEST_CASE("block containing strips a pendant piece") {
    // tetrahedron plus a pendant vertex 5 on vertex 1
    PlaneGraph g = tetra();
    g.n = 5;
    g.rot.push_back({1});
    g.rot[1].push_back(5);
    NearTriangulation t{g, trace_face_from(g, 1, 3).walk};
    // removing vertex 4 leaves triangle 1-2-3 plus the pendant 5
    NearTriangulation b = block_containing(t, {4}, 2);
    CHECK(b.g.degree(5) == 0);
    CHECK(b.g.degree(4) == 0);
    CHECK(same_cycle(b.outer, {1, 3, 2}));
}
