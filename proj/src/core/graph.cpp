#include "core/graph.hpp"

#include <algorithm>
#include <sstream>

namespace pdec {

void internal_fail(const char* cond, const char* file, int line, const std::string& msg) {
    std::ostringstream os;
    os << "internal error: " << msg << " [" << cond << " at " << file << ":" << line << "]";
    throw InternalError(os.str());
}

bool PlaneGraph::has_edge(int u, int v) const {
    if (u < 1 || u > n || v < 1 || v > n) return false;
    const auto& r = rot[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

long long PlaneGraph::edge_count() const {
    long long s = 0;
    for (int v = 1; v <= n; ++v) s += (long long)rot[v].size();
    return s / 2;
}

int rot_pred(const std::vector<int>& r, int u) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return r[i == 0 ? r.size() - 1 : i - 1];
    PDEC_CHECK(false, "rotation predecessor of absent neighbor");
}

int rot_next(const std::vector<int>& r, int u) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return r[(i + 1) % r.size()];
    PDEC_CHECK(false, "rotation successor of absent neighbor");
}

void PlaneGraph::validate() const {
    if (n < 0) throw GraphError("negative vertex count");
    if ((int)rot.size() != n + 1) throw GraphError("rotation table size does not match n");
    for (int v = 1; v <= n; ++v) {
        std::vector<int> seen;
        for (int u : rot[v]) {
            if (u < 1 || u > n) {
                std::ostringstream os;
                os << "vertex " << v << " lists neighbor " << u << " outside 1.." << n;
                throw GraphError(os.str());
            }
            if (u == v) {
                std::ostringstream os;
                os << "self loop at vertex " << v;
                throw GraphError(os.str());
            }
            seen.push_back(u);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            std::ostringstream os;
            os << "duplicate neighbor in rotation of vertex " << v;
            throw GraphError(os.str());
        }
    }
    for (int v = 1; v <= n; ++v)
        for (int u : rot[v])
            if (!has_edge(u, v)) {
                std::ostringstream os;
                os << "asymmetric rotation: vertex " << v << " lists " << u
                   << " but not vice versa";
                throw GraphError(os.str());
            }

    // Genus check per connected component: an embedded component with m >= 1
    // edges must trace exactly m - nv + 2 faces; isolated vertices trace none.
    std::vector<int> comp(n + 1, 0);
    int ncomp = 0;
    for (int s = 1; s <= n; ++s) {
        if (comp[s]) continue;
        ++ncomp;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : rot[v])
                if (!comp[u]) { comp[u] = ncomp; stack.push_back(u); }
        }
    }
    std::vector<long long> cv(ncomp + 1, 0), ce(ncomp + 1, 0), cf(ncomp + 1, 0);
    for (int v = 1; v <= n; ++v) {
        cv[comp[v]]++;
        ce[comp[v]] += (long long)rot[v].size();
    }
    for (const Face& f : trace_faces(*this))
        cf[comp[f.walk[0]]]++;
    for (int c = 1; c <= ncomp; ++c) {
        ce[c] /= 2;
        if (ce[c] == 0) {
            if (cf[c] != 0) throw GraphError("isolated vertex traced a face");
            continue;
        }
        if (cf[c] != ce[c] - cv[c] + 2) {
            std::ostringstream os;
            os << "rotation system is not planar: component traces " << cf[c]
               << " faces, expected " << (ce[c] - cv[c] + 2);
            throw GraphError(os.str());
        }
    }
}

Face trace_face_from(const PlaneGraph& g, int u, int v) {
    Face f;
    int a = u, b = v;
    do {
        f.walk.push_back(a);
        int c = rot_pred(g.rot[b], a);
        a = b;
        b = c;
        PDEC_CHECK(f.walk.size() <= 4 * g.rot.size() * g.rot.size() + 16,
                   "face tracing does not close");
    } while (!(a == u && b == v));
    return f;
}

std::vector<Face> trace_faces(const PlaneGraph& g) {
    // visited flag per directed edge, indexed by (tail, rotation slot)
    std::vector<std::vector<char>> done(g.n + 1);
    for (int v = 1; v <= g.n; ++v) done[v].assign(g.rot[v].size(), 0);

    auto slot_of = [&](int v, int u) {
        for (size_t i = 0; i < g.rot[v].size(); ++i)
            if (g.rot[v][i] == u) return i;
        PDEC_CHECK(false, "directed edge without rotation slot");
    };

    std::vector<Face> out;
    for (int v = 1; v <= g.n; ++v) {
        for (size_t i = 0; i < g.rot[v].size(); ++i) {
            if (done[v][i]) continue;
            Face f;
            int a = v, b = g.rot[v][i];
            do {
                size_t s = slot_of(a, b);
                PDEC_CHECK(!done[a][s], "face orbit revisits a directed edge");
                done[a][s] = 1;
                f.walk.push_back(a);
                int c = rot_pred(g.rot[b], a);
                a = b;
                b = c;
            } while (!(a == v && b == g.rot[v][i]));
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool is_connected(const PlaneGraph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.rot[v])
            if (!seen[u]) { seen[u] = 1; stack.push_back(u); ++cnt; }
    }
    return cnt == g.n;
}

bool is_triangulation(const PlaneGraph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    for (const Face& f : trace_faces(g))
        if (!f.is_strict_triangle()) return false;
    return true;
}

void NearTriangulation::validate() const {
    g.validate();
    if (g.n < 3) throw GraphError("near triangulation needs at least 3 vertices");
    // the edged part must be connected; isolated ids (cut away by surgery) are ignored
    {
        int base = 0;
        long long edged = 0;
        for (int v = 1; v <= g.n; ++v)
            if (g.degree(v) > 0) { ++edged; if (!base) base = v; }
        if (!base) throw GraphError("near triangulation has no edges");
        std::vector<char> seen(g.n + 1, 0);
        std::vector<int> stack{base};
        seen[base] = 1;
        long long cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.rot[v])
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); ++cnt; }
        }
        if (cnt != edged) throw GraphError("near triangulation must be connected");
    }
    if (outer.size() < 3) throw GraphError("outer walk shorter than 3");

    {
        std::vector<int> s(outer);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw GraphError("outer walk is not a simple cycle");
    }
    for (size_t i = 0; i < outer.size(); ++i) {
        int a = outer[i], b = outer[(i + 1) % outer.size()];
        if (a < 1 || a > g.n || !g.has_edge(a, b))
            throw GraphError("outer walk uses a missing edge");
    }
    Face tr = trace_face_from(g, outer[0], outer[1]);
    if (tr.walk != outer)
        throw GraphError("designated outer walk is not a face orbit");

    for (const Face& f : trace_faces(g)) {
        bool is_outer = false;
        for (size_t i = 0; i < f.walk.size() && !is_outer; ++i)
            if (f.walk[i] == outer[0] && f.walk[(i + 1) % f.walk.size()] == outer[1])
                is_outer = true;
        if (is_outer) continue;
        if (!f.is_strict_triangle()) {
            std::ostringstream os;
            os << "inner face of length " << f.walk.size() << " at vertex " << f.walk[0];
            throw GraphError(os.str());
        }
    }
}

} // namespace pdec
