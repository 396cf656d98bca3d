#include "core/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pdec {

const std::vector<int>& boundary_cycle(const NearTriangulation& t) { return t.outer; }

static std::vector<int> outer_positions(const NearTriangulation& t) {
    std::vector<int> pos(t.g.n + 1, -1);
    for (size_t i = 0; i < t.outer.size(); ++i) pos[t.outer[i]] = (int)i;
    return pos;
}

std::vector<std::pair<int, int>> find_chords(const NearTriangulation& t) {
    std::vector<int> pos = outer_positions(t);
    int L = (int)t.outer.size();
    std::vector<std::pair<int, int>> out;
    for (int w : t.outer)
        for (int u : t.g.rot[w]) {
            if (w >= u || pos[u] < 0) continue;
            int d = std::abs(pos[u] - pos[w]);
            if (d != 1 && d != L - 1) out.emplace_back(w, u);
        }
    std::sort(out.begin(), out.end());
    return out;
}

int b_value(const NearTriangulation& t, int x, int y, int w) {
    std::vector<int> pos = outer_positions(t);
    PDEC_CHECK(pos[w] >= 0, "b value of a non-boundary vertex");
    int L = (int)t.outer.size();
    int a = t.outer[(pos[w] + 1) % L];
    int b = t.outer[(pos[w] + L - 1) % L];
    int r = 0;
    if (a == x || a == y) ++r;
    if (b == x || b == y) ++r;
    return r;
}

// keep only neighbors accepted by `keep`, preserving rotation order
static void filter_rot(std::vector<int>& r, const std::vector<char>& keep) {
    size_t w = 0;
    for (size_t i = 0; i < r.size(); ++i)
        if (keep[r[i]]) r[w++] = r[i];
    r.resize(w);
}

std::pair<NearTriangulation, NearTriangulation>
split_at_chord(const NearTriangulation& t, int u, int v) {
    std::vector<int> pos = outer_positions(t);
    int L = (int)t.outer.size();
    if (pos[u] < 0 || pos[v] < 0 || !t.g.has_edge(u, v))
        throw GraphError("split_at_chord: uv is not a boundary-to-boundary edge");
    {
        int d = std::abs(pos[u] - pos[v]);
        if (d == 1 || d == L - 1) throw GraphError("split_at_chord: uv is not a chord");
    }

    // forward arc u..v and forward arc v..u in stored (counterclockwise) order
    auto arc = [&](int a, int b) {
        std::vector<int> w;
        for (int i = pos[a]; ; i = (i + 1) % L) {
            w.push_back(t.outer[i]);
            if (t.outer[i] == b) break;
        }
        return w;
    };
    std::vector<int> walk_uv = arc(u, v), walk_vu = arc(v, u);

    auto make_side = [&](const std::vector<int>& walk) {
        // vertices: the arc plus everything reachable without passing u,v
        std::vector<char> keep(t.g.n + 1, 0);
        for (int w : walk) keep[w] = 1;
        std::vector<int> stack;
        for (int w : walk)
            if (w != u && w != v) stack.push_back(w);
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : t.g.rot[a])
                if (!keep[b]) { keep[b] = 1; stack.push_back(b); }
        }
        NearTriangulation s;
        s.g.n = t.g.n;
        s.g.rot.assign(t.g.n + 1, {});
        for (int a = 1; a <= t.g.n; ++a) {
            if (!keep[a]) continue;
            s.g.rot[a] = t.g.rot[a];
            if (a == u || a == v) filter_rot(s.g.rot[a], keep);
        }
        s.outer = walk;
        s.validate();
        return s;
    };

    NearTriangulation su = make_side(walk_uv), sv = make_side(walk_vu);
    // first = side containing the directed outer edge (outer[0], outer[1]);
    // that edge lies on the forward arc u..v iff position 0 is inside it
    bool in_uv = false;
    for (size_t i = 0; i + 1 < walk_uv.size(); ++i)
        if (walk_uv[i] == t.outer[0]) { in_uv = true; break; }
    if (in_uv) return {su, sv};
    return {sv, su};
}

NearTriangulation remove_boundary_vertex(const NearTriangulation& t, int z) {
    std::vector<int> pos = outer_positions(t);
    if (pos[z] < 0) throw GraphError("remove_boundary_vertex: z is not on the boundary");
    NearTriangulation s;
    s.g = t.g;
    for (int u : t.g.rot[z]) {
        auto& r = s.g.rot[u];
        r.erase(std::find(r.begin(), r.end(), z));
    }
    s.g.rot[z].clear();

    int L = (int)t.outer.size();
    int a = 0, b = 0;
    for (int i = 0; i < L; ++i) {
        int p = t.outer[i], q = t.outer[(i + 1) % L];
        if (p != z && q != z) { a = p; b = q; break; }
    }
    if (!a) throw GraphError("remove_boundary_vertex: no surviving outer edge");
    s.outer = trace_face_from(s.g, a, b).walk;
    s.validate();
    return s;
}

PlaneGraph insert_apex(const PlaneGraph& g, const Face& f, int* new_id) {
    PlaneGraph r = g;
    int x = ++r.n;
    r.rot.emplace_back();
    if (new_id) *new_id = x;

    std::vector<char> joined(r.n + 1, 0);
    size_t L = f.walk.size();
    PDEC_CHECK(L >= 2, "apex insertion into a degenerate walk");
    for (size_t i = 0; i < L; ++i) {
        int w = f.walk[i];
        if (joined[w]) continue;  // a repeated walk vertex is joined once
        joined[w] = 1;
        r.rot[x].push_back(w);
        int u = f.walk[(i + L - 1) % L];
        // corner (u,w)->(w,v): splice x between v and u, i.e. just before u
        auto& rw = r.rot[w];
        if (rw.empty()) { rw.push_back(x); continue; }
        auto it = std::find(rw.begin(), rw.end(), u);
        PDEC_CHECK(it != rw.end(), "face walk corner without rotation entry");
        rw.insert(it, x);
    }
    return r;
}

static std::vector<int> canonical_triangle_walk(const Face& f) {
    std::vector<int> w = f.walk;
    int k = (int)(std::min_element(w.begin(), w.end()) - w.begin());
    std::rotate(w.begin(), w.begin() + k, w.end());
    return w;
}

TriangulateResult triangulate(const PlaneGraph& g) {
    g.validate();
    if (g.n == 0) throw GraphError("triangulate: empty graph");

    TriangulateResult res;
    res.orig_n = g.n;
    PlaneGraph cur = g;

    // connect components: bridge the smallest-id vertex of the component of 1
    // to the smallest-id vertex outside it, splicing at the rotation ends
    for (;;) {
        std::vector<char> seen(cur.n + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : cur.rot[v])
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
        }
        int out = 0;
        for (int v = 1; v <= cur.n && !out; ++v)
            if (!seen[v]) out = v;
        if (!out) break;
        int in = 1;
        cur.rot[in].push_back(out);
        cur.rot[out].push_back(in);
        res.added_edges.emplace_back(in, out);
    }

    // single vertex: no face to work with, bootstrap one edge
    if (cur.n == 1) {
        cur.n = 2;
        cur.rot.push_back({1});
        cur.rot[1].push_back(2);
        res.added_edges.emplace_back(1, 2);
    }

    long long guard = 4LL * (cur.n + cur.edge_count()) + 64;
    for (;;) {
        PDEC_CHECK(guard-- > 0, "triangulate does not converge");
        std::vector<Face> faces = trace_faces(cur);
        const Face* pick = nullptr;
        for (const Face& f : faces)
            if (!f.is_strict_triangle()) { pick = &f; break; }
        if (!pick) break;
        int old_n = cur.n, x = 0;
        cur = insert_apex(cur, *pick, &x);
        (void)old_n;
        for (int w : cur.rot[x]) res.added_edges.emplace_back(w, x);
    }

    res.tri.g = cur;
    res.tri.outer = canonical_outer_triangle(cur);
    res.tri.validate();
    return res;
}

std::vector<int> canonical_outer_triangle(const PlaneGraph& g) {
    std::vector<Face> faces = trace_faces(g);
    PDEC_CHECK(!faces.empty(), "graph has no faces");
    bool have = false;
    std::vector<int> best_key, best_walk;
    for (const Face& f : faces) {
        PDEC_CHECK(f.is_strict_triangle(), "outer-face rule on a non-triangle face");
        std::vector<int> key = f.walk;
        std::sort(key.begin(), key.end());
        std::vector<int> walk = canonical_triangle_walk(f);
        if (!have || key < best_key || (key == best_key && walk < best_walk)) {
            have = true;
            best_key = key;
            best_walk = walk;
        }
    }
    return best_walk;
}

NearTriangulation block_containing(const NearTriangulation& t,
                                   const std::vector<int>& removed, int anchor) {
    std::vector<char> gone(t.g.n + 1, 0);
    for (int v : removed) gone[v] = 1;
    PDEC_CHECK(!gone[anchor], "block anchor was removed");

    PlaneGraph h = t.g;
    for (int v = 1; v <= h.n; ++v) {
        if (gone[v]) { h.rot[v].clear(); continue; }
        std::vector<char> keep(h.n + 1, 1);
        bool any = false;
        for (int u : h.rot[v])
            if (gone[u]) { keep[u] = 0; any = true; }
        if (any) filter_rot(h.rot[v], keep);
    }

    // biconnected components by lowpoint, iterative; edges carried on a stack
    std::vector<int> num(h.n + 1, 0), low(h.n + 1, 0), it(h.n + 1, 0), parent(h.n + 1, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<char> in_block(h.n + 1, 0);
    int timer = 0;
    bool found = false;
    std::vector<int> dfs{anchor};
    num[anchor] = low[anchor] = ++timer;
    while (!dfs.empty() && !found) {
        int v = dfs.back();
        if (it[v] < (int)h.rot[v].size()) {
            int u = h.rot[v][it[v]++];
            if (u == parent[v]) continue;
            if (!num[u]) {
                estack.emplace_back(v, u);
                parent[u] = v;
                num[u] = low[u] = ++timer;
                dfs.push_back(u);
            } else if (num[u] < num[v]) {
                estack.emplace_back(v, u);
                low[v] = std::min(low[v], num[u]);
            }
        } else {
            dfs.pop_back();
            if (dfs.empty()) break;
            int p = dfs.back();
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= num[p]) {
                // one biconnected component ends at treelink p-v
                std::vector<std::pair<int, int>> comp;
                for (;;) {
                    auto e = estack.back();
                    estack.pop_back();
                    comp.push_back(e);
                    if (e.first == p && e.second == v) break;
                }
                bool has_anchor = false;
                for (auto& e : comp)
                    if (e.first == anchor || e.second == anchor) has_anchor = true;
                if (has_anchor) {
                    for (auto& e : comp) in_block[e.first] = in_block[e.second] = 1;
                    found = true;
                }
            }
        }
    }
    if (!found) throw GraphError("block_containing: anchor lies in no 2-connected block");

    for (int v = 1; v <= h.n; ++v) {
        if (!in_block[v]) { h.rot[v].clear(); continue; }
        filter_rot(h.rot[v], in_block);
    }

    // recompute the outer face from any surviving old outer edge
    int L = (int)t.outer.size();
    std::vector<int> walk;
    bool have = false;
    for (int i = 0; i < L; ++i) {
        int a = t.outer[i], b = t.outer[(i + 1) % L];
        if (!in_block[a] || !in_block[b] || !h.has_edge(a, b)) continue;
        if (!have) {
            walk = trace_face_from(h, a, b).walk;
            have = true;
        } else {
            bool on = false;
            for (size_t j = 0; j < walk.size(); ++j)
                if (walk[j] == a && walk[(j + 1) % walk.size()] == b) on = true;
            PDEC_CHECK(on, "surviving outer edges disagree on the new outer face");
        }
    }
    if (!have) throw GraphError("block_containing: no outer edge survived");
    NearTriangulation s;
    s.g = std::move(h);
    s.outer = std::move(walk);
    s.validate();
    return s;
}

} // namespace pdec
