#include "verify/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace pdec {

OrderingResult degeneracy_ordering(const PlaneGraph& g, int d) {
    OrderingResult res;
    std::vector<int> deg(g.n + 1, 0);
    std::vector<char> gone(g.n + 1, 0);
    // priority by (degree, id); lazily re-checked on pop
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                        std::greater<>>
        pq;
    for (int v = 1; v <= g.n; ++v) {
        deg[v] = g.degree(v);
        pq.push({deg[v], v});
    }
    std::vector<int> deleted;
    int left = g.n;
    while (left > 0) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (gone[v] || dv != deg[v]) continue;
        if (dv > d) break;  // minimum degree already exceeds d
        gone[v] = 1;
        --left;
        deleted.push_back(v);
        for (int u : g.rot[v])
            if (!gone[u]) pq.push({--deg[u], u});
    }
    if (left > 0) {
        for (int v = 1; v <= g.n; ++v)
            if (!gone[v]) res.residue.push_back(v);
        return res;
    }
    res.found = true;
    res.order.assign(deleted.rbegin(), deleted.rend());
    return res;
}

std::vector<std::pair<int, int>> ordering_to_orientation(
    const PlaneGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n + 1, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= g.n; ++v)
        for (int u : g.rot[v]) {
            if (v > u) continue;
            PDEC_CHECK(pos[v] >= 0 && pos[u] >= 0, "ordering does not cover the graph");
            if (pos[v] > pos[u])
                arcs.emplace_back(v, u);
            else
                arcs.emplace_back(u, v);
        }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

TopoResult orientation_to_ordering(int n, const std::vector<std::pair<int, int>>& arcs) {
    TopoResult res;
    std::vector<std::vector<int>> in(n + 1);  // in[v]: tails of arcs into v
    std::vector<int> outdeg(n + 1, 0);
    for (auto [u, v] : arcs) {
        PDEC_CHECK(u >= 1 && u <= n && v >= 1 && v <= n && u != v, "arc out of range");
        in[v].push_back(u);
        outdeg[u]++;
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 1; v <= n; ++v)
        if (outdeg[v] == 0) ready.push(v);
    std::vector<char> placed(n + 1, 0);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        if (placed[v]) continue;
        placed[v] = 1;
        res.order.push_back(v);
        for (int u : in[v])
            if (--outdeg[u] == 0) ready.push(u);
    }
    if ((int)res.order.size() == n) {
        res.acyclic = true;
        return res;
    }
    // walk out-arcs among unplaced vertices until a repeat closes a cycle
    std::map<int, int> succ;
    for (auto [u, v] : arcs)
        if (!placed[u] && !placed[v] && !succ.count(u)) succ[u] = v;
    int v = succ.begin()->first;
    std::map<int, int> at;
    std::vector<int> path;
    while (!at.count(v)) {
        at[v] = (int)path.size();
        path.push_back(v);
        v = succ.at(v);
    }
    res.cycle.assign(path.begin() + at[v], path.end());
    return res;
}

namespace {

struct EdgeKey {
    static long long dir(int u, int v) { return (long long)u << 32 | (unsigned)v; }
    static long long und(int u, int v) {
        return dir(std::min(u, v), std::max(u, v));
    }
};

std::string edge_str(int u, int v) {
    std::ostringstream os;
    os << u << "-" << v;
    return os.str();
}

/*
 * Shared partition + acyclicity conditions. Degree tables are filled from all
 * in-range entries even when the partition is broken, so the per-condition
 * verdicts below stay meaningful on malformed pairs.
 */
struct PartitionInfo {
    std::vector<int> outdeg, hdeg;
    std::vector<std::vector<int>> hadj;
};

PartitionInfo base_conditions(const PlaneGraph& g, const DecompPair& p,
                              ConditionReport& rep) {
    PartitionInfo info;
    ConditionReport::Item part{"partition", true, ""};
    std::set<long long> seen_dir, seen_und;
    info.outdeg.assign(g.n + 1, 0);
    info.hdeg.assign(g.n + 1, 0);
    info.hadj.assign(g.n + 1, {});
    long long covered = 0;
    std::vector<std::pair<int, int>> arcs_in_range;
    auto bad = [&](const std::string& s) {
        if (part.ok) { part.ok = false; part.detail = s; }
    };
    auto in_range = [&](int u, int v) {
        return u >= 1 && u <= g.n && v >= 1 && v <= g.n && u != v;
    };
    for (auto [u, v] : p.arcs) {
        if (!in_range(u, v)) { bad("arc " + edge_str(u, v) + " out of range"); continue; }
        arcs_in_range.emplace_back(u, v);
        info.outdeg[u]++;
        if (!g.has_edge(u, v)) { bad("arc " + edge_str(u, v) + " is not an edge"); continue; }
        if (!seen_dir.insert(EdgeKey::dir(u, v)).second) {
            bad("duplicate arc " + edge_str(u, v));
            continue;
        }
        if (!seen_und.insert(EdgeKey::und(u, v)).second) {
            bad("edge " + edge_str(u, v) + " assigned twice");
            continue;
        }
        ++covered;
    }
    for (auto [u, v] : p.hedges) {
        if (!in_range(u, v)) { bad("H edge " + edge_str(u, v) + " out of range"); continue; }
        info.hdeg[u]++;
        info.hdeg[v]++;
        info.hadj[u].push_back(v);
        info.hadj[v].push_back(u);
        if (!g.has_edge(u, v)) { bad("H edge " + edge_str(u, v) + " is not an edge"); continue; }
        if (!seen_und.insert(EdgeKey::und(u, v)).second) {
            bad("edge " + edge_str(u, v) + " assigned twice");
            continue;
        }
        ++covered;
    }
    if (part.ok && covered != g.edge_count()) {
        std::ostringstream os;
        os << "covers " << covered << " of " << g.edge_count() << " edges";
        bad(os.str());
    }
    rep.items.push_back(part);

    ConditionReport::Item acy{"acyclic", true, ""};
    TopoResult topo = orientation_to_ordering(g.n, arcs_in_range);
    if (!topo.acyclic) {
        acy.ok = false;
        std::ostringstream os;
        os << "directed cycle:";
        for (int v : topo.cycle) os << " " << v;
        acy.detail = os.str();
    }
    rep.items.push_back(acy);
    return info;
}

}  // namespace

ConditionReport check_dh(const PlaneGraph& g, const DecompPair& p, int d, int h) {
    ConditionReport rep;
    PartitionInfo info = base_conditions(g, p, rep);
    ConditionReport::Item dd{"out-degree", true, ""}, hh{"H-degree", true, ""};
    for (int v = 1; v <= g.n; ++v) {
        if (info.outdeg[v] > d && dd.ok) {
            std::ostringstream os;
            os << "vertex " << v << " has out-degree " << info.outdeg[v] << " > " << d;
            dd.ok = false;
            dd.detail = os.str();
        }
        if (info.hdeg[v] > h && hh.ok) {
            std::ostringstream os;
            os << "vertex " << v << " has H-degree " << info.hdeg[v] << " > " << h;
            hh.ok = false;
            hh.detail = os.str();
        }
    }
    rep.items.push_back(dd);
    rep.items.push_back(hh);
    return rep;
}

namespace {

struct BoundaryCtx {
    std::vector<int> pos;  // position on outer walk, -1 off boundary
    const NearTriangulation* t;

    explicit BoundaryCtx(const NearTriangulation& nt) : pos(nt.g.n + 1, -1), t(&nt) {
        for (size_t i = 0; i < nt.outer.size(); ++i) pos[nt.outer[i]] = (int)i;
    }
    bool on(int v) const { return pos[v] >= 0; }
    std::pair<int, int> cycle_neighbors(int v) const {
        int L = (int)t->outer.size();
        return {t->outer[(pos[v] + 1) % L], t->outer[(pos[v] + L - 1) % L]};
    }
    int b(int x, int y, int w) const {
        auto [a, c] = cycle_neighbors(w);
        int r = 0;
        if (a == x || a == y) ++r;
        if (c == x || c == y) ++r;
        return r;
    }
    bool cycle_adjacent(int a, int w) const {
        auto [p, q] = cycle_neighbors(w);
        return a == p || a == q;
    }
};

void require_root_edge(const BoundaryCtx& B, int x, int y) {
    if (x == y || !B.on(x) || !B.on(y) || !B.cycle_adjacent(x, y))
        throw GraphError("root edge xy must be a boundary edge");
}

}  // namespace

ConditionReport check_26(const NearTriangulation& t, int x, int y, int z,
                         const DecompPair& p) {
    BoundaryCtx B(t);
    require_root_edge(B, x, y);
    if (!B.on(z) || z == x || z == y)
        throw GraphError("root vertex z must be a boundary vertex other than x,y");

    ConditionReport rep;
    PartitionInfo info = base_conditions(t.g, p, rep);

    auto item = [&](const char* name) -> ConditionReport::Item& {
        rep.items.push_back({name, true, ""});
        return rep.items.back();
    };
    auto fail = [](ConditionReport::Item& it, const std::string& s) {
        if (it.ok) { it.ok = false; it.detail = s; }
    };

    auto& c1 = item("interior-degrees");
    auto& c2 = item("boundary-degrees");
    for (int v = 1; v <= t.g.n; ++v) {
        if (t.g.degree(v) == 0) continue;
        std::ostringstream os;
        if (!B.on(v)) {
            if (info.outdeg[v] > 2 || info.hdeg[v] > 6) {
                os << "interior vertex " << v << " has out-degree " << info.outdeg[v]
                   << ", H-degree " << info.hdeg[v];
                fail(c1, os.str());
            }
        } else {
            int cap = 5 - B.b(x, y, v);
            if (info.outdeg[v] > 1 || info.hdeg[v] > cap) {
                os << "boundary vertex " << v << " has out-degree " << info.outdeg[v]
                   << ", H-degree " << info.hdeg[v] << " with cap " << cap;
                fail(c2, os.str());
            }
        }
    }

    auto& c3 = item("root-behavior");
    if (info.outdeg[y] != 0 || info.hdeg[y] != 0)
        fail(c3, "y must have out-degree 0 and H-degree 0");
    bool xy_arc = false;
    for (auto [u, v] : p.arcs)
        if (u == x) xy_arc = (v == y);
    if (info.outdeg[x] != 1 || !xy_arc)
        fail(c3, "x must have (x,y) as its only out-arc");
    if (info.hdeg[x] > 1) fail(c3, "x has H-degree above 1");
    if (info.hdeg[x] == 1) {
        int s = info.hadj[x][0];
        if (!B.on(s) || !t.g.has_edge(s, x) || !t.g.has_edge(s, y))
            fail(c3, "x's H-neighbor must be a boundary common neighbor of x and y");
    }

    auto [zp, zpp] = B.cycle_neighbors(z);
    auto& c4 = item("z-cap");
    int zcap = 4 - B.b(x, y, z);
    if (info.hdeg[z] > zcap) {
        std::ostringstream os;
        os << "z has H-degree " << info.hdeg[z] << " > " << zcap;
        fail(c4, os.str());
    } else if (info.hdeg[z] == zcap) {
        for (int w : {zp, zpp}) {
            if (info.hdeg[w] > 4 - B.b(x, y, w)) {
                std::ostringstream os;
                os << "z is tight but its boundary neighbor " << w << " has H-degree "
                   << info.hdeg[w];
                fail(c4, os.str());
            }
        }
    }

    auto& c5 = item("z-neighborhood-sum");
    int lhs = info.hdeg[z] + info.hdeg[zp] + info.hdeg[zpp];
    int rhs = 12 - B.b(x, y, zp) - B.b(x, y, zpp);
    if (lhs > rhs) {
        std::ostringstream os;
        os << "H-degrees around z sum to " << lhs << " > " << rhs;
        fail(c5, os.str());
    }
    return rep;
}

ConditionReport check_32(const NearTriangulation& t, int x, int y, int z,
                         std::optional<int> zp, const DecompPair& p) {
    BoundaryCtx B(t);
    require_root_edge(B, x, y);
    if (!B.on(z) || z == x || z == y)
        throw GraphError("root vertex z must be a boundary vertex other than x,y");
    bool z_at_root = B.cycle_adjacent(x, z) || B.cycle_adjacent(y, z);
    if (z_at_root && zp)
        throw GraphError("z' must be omitted when z has a root boundary neighbor");
    if (!z_at_root && !zp)
        throw GraphError("z' is required when z has no root boundary neighbor");
    if (zp && !B.cycle_adjacent(*zp, z))
        throw GraphError("z' must be a boundary neighbor of z");

    ConditionReport rep;
    PartitionInfo info = base_conditions(t.g, p, rep);

    auto item = [&](const char* name) -> ConditionReport::Item& {
        rep.items.push_back({name, true, ""});
        return rep.items.back();
    };
    auto fail = [](ConditionReport::Item& it, const std::string& s) {
        if (it.ok) { it.ok = false; it.detail = s; }
    };

    auto& c1 = item("interior-degrees");
    auto& c2 = item("boundary-degrees");
    for (int v = 1; v <= t.g.n; ++v) {
        if (t.g.degree(v) == 0) continue;
        std::ostringstream os;
        if (!B.on(v)) {
            if (info.outdeg[v] > 3 || info.hdeg[v] > 2) {
                os << "interior vertex " << v << " has out-degree " << info.outdeg[v]
                   << ", H-degree " << info.hdeg[v];
                fail(c1, os.str());
            }
        } else {
            bool exempt = zp && v == *zp;
            if (info.outdeg[v] > 2 || info.hdeg[v] > 2 ||
                (!exempt && info.outdeg[v] + info.hdeg[v] > 3)) {
                os << "boundary vertex " << v << " has out-degree " << info.outdeg[v]
                   << ", H-degree " << info.hdeg[v];
                fail(c2, os.str());
            }
        }
    }

    auto& c3 = item("root-behavior");
    if (info.outdeg[y] != 0 || info.hdeg[y] != 0)
        fail(c3, "y must have out-degree 0 and H-degree 0");
    bool xy_arc = false;
    for (auto [u, v] : p.arcs)
        if (u == x) xy_arc = (v == y);
    if (info.outdeg[x] != 1 || !xy_arc)
        fail(c3, "x must have (x,y) as its only out-arc");
    if (info.hdeg[x] != 0) fail(c3, "x must have H-degree 0");
    if (info.outdeg[z] + info.hdeg[z] > 2) {
        std::ostringstream os;
        os << "z has out-degree " << info.outdeg[z] << " plus H-degree " << info.hdeg[z]
           << " above 2";
        fail(c3, os.str());
    }
    return rep;
}

DecompPair restrict_pair(const DecompPair& p, const PlaneGraph& g) {
    DecompPair r;
    for (auto [u, v] : p.arcs)
        if (g.has_edge(u, v)) r.arcs.emplace_back(u, v);
    for (auto [u, v] : p.hedges)
        if (g.has_edge(u, v)) r.hedges.emplace_back(u, v);
    r.canonicalize();
    return r;
}

bool infeasibility_bound_23(long long n) { return 3 * n < 4 * n - 10; }

} // namespace pdec
