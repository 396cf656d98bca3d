#include "gen/gen.hpp"

#include "core/surgery.hpp"

#include <array>

namespace pdec {

namespace {

NearTriangulation finish(PlaneGraph g) {
    NearTriangulation t;
    t.outer = canonical_outer_triangle(g);
    t.g = std::move(g);
    t.validate();
    return t;
}

}  // namespace

NearTriangulation stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError("stacked triangulation needs n >= 3");
    PlaneGraph g(3);
    g.rot[1] = {2, 3};
    g.rot[2] = {3, 1};
    g.rot[3] = {1, 2};

    // live faces in trace-discovery order; a picked face is replaced by its
    // first child, the other two are appended
    std::vector<std::array<int, 3>> faces{{1, 2, 3}, {1, 3, 2}};
    SplitMix64 rng(seed);
    for (int v = 4; v <= n; ++v) {
        size_t idx = (size_t)(rng.next() % faces.size());
        auto [a, b, c] = faces[idx];
        int x = 0;
        g = insert_apex(g, Face{{a, b, c}}, &x);
        PDEC_CHECK(x == v, "stacking ids out of order");
        faces[idx] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return finish(std::move(g));
}

NearTriangulation double_wheel(int k) {
    if (k < 3) throw GraphError("double wheel needs k >= 3");
    PlaneGraph g(k + 2);
    int h1 = k + 1, h2 = k + 2;
    for (int i = 1; i <= k; ++i) {
        int nx = i % k + 1, pv = (i + k - 2) % k + 1;
        g.rot[i] = {h2, nx, h1, pv};
    }
    for (int i = 1; i <= k; ++i) g.rot[h1].push_back(i);
    for (int i = k; i >= 1; --i) g.rot[h2].push_back(i);
    return finish(std::move(g));
}

NearTriangulation named_solid(const std::string& name) {
    if (name == "tetrahedron") {
        PlaneGraph g(4);
        g.rot[1] = {2, 3, 4};
        g.rot[2] = {1, 4, 3};
        g.rot[3] = {1, 2, 4};
        g.rot[4] = {1, 3, 2};
        return finish(std::move(g));
    }
    if (name == "octahedron") return double_wheel(4);
    if (name == "icosahedron") {
        // apex 1, upper ring 2..6, lower ring 7..11, apex 12
        PlaneGraph g(12);
        g.rot[1] = {2, 3, 4, 5, 6};
        g.rot[2] = {3, 1, 6, 11, 7};
        g.rot[3] = {1, 2, 7, 8, 4};
        g.rot[4] = {1, 3, 8, 9, 5};
        g.rot[5] = {1, 4, 9, 10, 6};
        g.rot[6] = {1, 5, 10, 11, 2};
        g.rot[7] = {2, 11, 12, 8, 3};
        g.rot[8] = {3, 7, 12, 9, 4};
        g.rot[9] = {4, 8, 12, 10, 5};
        g.rot[10] = {5, 9, 12, 11, 6};
        g.rot[11] = {7, 2, 6, 10, 12};
        g.rot[12] = {8, 7, 11, 10, 9};
        return finish(std::move(g));
    }
    throw GraphError("unknown solid: " + name);
}

StellateResult stellate(const PlaneGraph& g) {
    if (!is_triangulation(g)) throw GraphError("stellate expects a triangulation");
    StellateResult res;
    res.orig_n = g.n;
    std::vector<Face> faces = trace_faces(g);
    PlaneGraph cur = g;
    for (const Face& f : faces) cur = insert_apex(cur, f, nullptr);
    res.g = std::move(cur);
    res.g.validate();
    return res;
}

} // namespace pdec
