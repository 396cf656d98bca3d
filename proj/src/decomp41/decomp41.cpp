#include "decomp41/decomp41.hpp"

#include "verify/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace pdec {

namespace {

long long edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return ((long long)u << 32) | (unsigned)v;
}

// exact rational charge, kept in lowest terms with a positive denominator
struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac make(long long n, long long d) {
        PDEC_CHECK(d != 0, "zero denominator in a charge fraction");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return {n, d};
    }
    Frac& operator+=(const Frac& o) {
        __int128 n = (__int128)num * o.den + (__int128)o.num * den;
        __int128 d = (__int128)den * o.den;
        __int128 g = d;
        __int128 a = n < 0 ? -n : n;
        while (a) { __int128 t = g % a; g = a; a = t; }
        if (g > 1) { n /= g; d /= g; }
        PDEC_CHECK(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX,
                   "charge fraction overflows 64 bits");
        num = (long long)n;
        den = (long long)d;
        return *this;
    }
    Frac operator-() const { return {-num, den}; }
};

std::vector<int> graph_degrees(const PlaneGraph& g) {
    std::vector<int> deg(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) deg[v] = g.degree(v);
    return deg;
}

/*
 * First reducible pattern, or nothing. Scans the five kinds in order; inside
 * a kind the center id ascends and the first matching rotation offset wins.
 * Vertices of degree 0 are the ids cut away by earlier deletions and are
 * skipped. On a triangulation the consecutiveness checks reduce to degree
 * patterns because consecutive rotation neighbors are always adjacent.
 */
std::optional<ReducibleConfig> scan_config(const PlaneGraph& g) {
    std::vector<int> deg = graph_degrees(g);

    for (int v = 1; v <= g.n; ++v)
        if (deg[v] >= 1 && deg[v] <= 4)
            return ReducibleConfig{ConfigKind::low_vertex, {v}};

    for (int u = 1; u <= g.n; ++u) {
        if (deg[u] != 5) continue;
        int best = 0;
        for (int w : g.rot[u])
            if (deg[w] == 5 && (!best || w < best)) best = w;
        if (best) return ReducibleConfig{ConfigKind::five_pair, {u, best}};
    }

    for (int v = 1; v <= g.n; ++v) {
        if (deg[v] != 5) continue;
        const auto& r = g.rot[v];
        for (int i = 0; i < 5; ++i) {
            int a = r[i], b = r[(i + 1) % 5], c = r[(i + 2) % 5];
            if (deg[a] <= 6 && deg[b] <= 6 && deg[c] <= 6) {
                PDEC_CHECK(g.has_edge(a, b) && g.has_edge(b, c),
                           "consecutive rotation neighbors not adjacent");
                return ReducibleConfig{ConfigKind::five_fan, {v, a, b, c}};
            }
        }
    }

    for (int v = 1; v <= g.n; ++v) {
        if (deg[v] != 5) continue;
        const auto& r = g.rot[v];
        int sevens = 0, low = 0;
        for (int w : r) {
            if (deg[w] == 7) ++sevens;
            if (deg[w] <= 6) ++low;
        }
        if (sevens != 2 || low != 3) continue;
        for (int i = 0; i < 5; ++i) {
            int u1 = r[i], u2 = r[(i + 1) % 5], u3 = r[(i + 2) % 5];
            int u4 = r[(i + 3) % 5], u5 = r[(i + 4) % 5];
            if (deg[u1] <= 6 && deg[u2] <= 6 && deg[u3] == 7 && deg[u4] <= 6 &&
                deg[u5] == 7) {
                // a 5-neighbor of the 5-vertex v would be an earlier pattern
                PDEC_CHECK(deg[u1] == 6 && deg[u2] == 6 && deg[u4] == 6,
                           "a 5-neighbor survived the adjacent-pair scan");
                return ReducibleConfig{ConfigKind::five_wheel, {v, u1, u2, u3, u4, u5}};
            }
        }
        PDEC_CHECK(false, "degrees 6,6,7,6,7 admit no aligned rotation offset");
    }

    for (int v = 1; v <= g.n; ++v) {
        if (deg[v] != 7) continue;
        const auto& r = g.rot[v];
        for (int i = 0; i < 7; ++i) {
            int a = r[i], b = r[(i + 1) % 7], c = r[(i + 2) % 7];
            if (deg[a] == 5 && deg[b] == 6 && deg[c] == 5) {
                PDEC_CHECK(!g.has_edge(a, c),
                           "adjacent 5-vertices survived the pair scan");
                return ReducibleConfig{ConfigKind::seven_fan, {v, a, b, c}};
            }
        }
    }

    return std::nullopt;
}

// splice the chord (walk[p], walk[q]) into the rotations so it runs inside
// the traced face; each endpoint goes in just before that corner's walk
// predecessor, mirroring the apex splice
void chord_insert(PlaneGraph& g, const std::vector<int>& walk, int p, int q,
                  std::vector<std::pair<int, int>>& added) {
    int L = (int)walk.size();
    auto splice = [&](int at, int other) {
        int anchor = walk[(at + L - 1) % L];
        auto& r = g.rot[walk[at]];
        auto it = std::find(r.begin(), r.end(), anchor);
        PDEC_CHECK(it != r.end(), "face corner without its rotation entry");
        r.insert(it, other);
    };
    PDEC_CHECK(walk[p] != walk[q] && !g.has_edge(walk[p], walk[q]),
               "chord endpoints must be distinct and non-adjacent");
    splice(p, walk[q]);
    splice(q, walk[p]);
    added.emplace_back(walk[p], walk[q]);
}

// triangulate one simple-cycle face by fanning from a corner with no prior
// chord into the face; the ear argument guarantees such a corner
void fan_face(PlaneGraph& g, std::vector<int> w,
              std::vector<std::pair<int, int>>& added) {
    int L = (int)w.size();
    int center = -1;
    for (int c = 0; c < L && center < 0; ++c) {
        bool clean = true;
        for (int t = 0; t < L && clean; ++t) {
            int d = (t - c + L) % L;
            if (d <= 1 || d == L - 1) continue;
            if (g.has_edge(w[c], w[t])) clean = false;
        }
        if (clean) center = c;
    }
    PDEC_CHECK(center >= 0, "every corner of a simple face carries a chord");
    std::rotate(w.begin(), w.begin() + center, w.end());
    while (w.size() > 3) {
        chord_insert(g, w, 0, 2, added);
        w.erase(w.begin() + 1);
    }
}

std::vector<std::pair<int, int>> fill_impl(PlaneGraph& g, const std::vector<char>& alive) {
    std::vector<std::pair<int, int>> added;
    int live = 0, first = 0;
    for (int v = 1; v <= g.n; ++v)
        if (alive[v]) { ++live; if (!first) first = v; }
    PDEC_CHECK(live >= 3, "triangulation completion needs at least 3 vertices");

    // bridge the components together, smallest ids first
    for (;;) {
        std::vector<char> seen(g.n + 1, 0);
        std::vector<int> stack{first};
        seen[first] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.rot[v])
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
        }
        int out = 0;
        for (int v = 1; v <= g.n && !out; ++v)
            if (alive[v] && !seen[v]) out = v;
        if (!out) break;
        g.rot[first].push_back(out);
        g.rot[out].push_back(first);
        added.emplace_back(first, out);
    }

    long long guard = 3LL * live + 8;
    for (;;) {
        PDEC_CHECK(guard-- > 0, "triangulation completion does not converge");
        std::vector<Face> faces = trace_faces(g);
        const Face* pick = nullptr;
        for (const Face& f : faces)
            if (!f.is_strict_triangle()) { pick = &f; break; }
        if (!pick) break;

        const std::vector<int>& w = pick->walk;
        int L = (int)w.size();
        PDEC_CHECK(L >= 4, "a non-triangle face short of four corners");
        int ri = -1, rj = -1;
        {
            std::vector<int> seen_at(g.n + 1, -1);
            for (int i = 0; i < L && ri < 0; ++i) {
                if (seen_at[w[i]] >= 0) { ri = seen_at[w[i]]; rj = i; }
                seen_at[w[i]] = i;
            }
        }
        if (ri < 0) {
            fan_face(g, w, added);
        } else {
            // self-touching walk: split off the loop after the repeat
            int p = (ri + 1) % L, q = (rj + 1) % L;
            if (w[p] == w[q] || g.has_edge(w[p], w[q])) {
                p = -1;
                for (int i = 0; i < L && p < 0; ++i)
                    for (int j = i + 2; j < L && p < 0; ++j) {
                        if (i == 0 && j == L - 1) continue;
                        if (w[i] != w[j] && !g.has_edge(w[i], w[j])) { p = i; q = j; }
                    }
                PDEC_CHECK(p >= 0, "self-touching face without a usable chord");
            }
            chord_insert(g, w, p, q, added);
        }
    }

    for (const Face& f : trace_faces(g))
        PDEC_CHECK(f.is_strict_triangle(), "completion left a non-triangle face");
    PDEC_CHECK(g.edge_count() == 3LL * live - 6,
               "triangulation edge count off after completion");
    return added;
}

// matching edges and append sequence for a found pattern, in the order the
// extension uses them; vertices stay as scan_config laid them out
struct Extension {
    std::vector<int> appendix;
    std::vector<std::pair<int, int>> medges;
};

Extension extension_for(const ReducibleConfig& c) {
    const std::vector<int>& s = c.vertices;
    switch (c.kind) {
        case ConfigKind::low_vertex:
            return {{s[0]}, {}};
        case ConfigKind::five_pair:
            return {{s[1], s[0]}, {{s[0], s[1]}}};
        case ConfigKind::five_fan:
            return {{s[3], s[1], s[2], s[0]}, {{s[0], s[1]}, {s[2], s[3]}}};
        case ConfigKind::five_wheel:
            return {{s[5], s[1], s[3], s[2], s[4], s[0]},
                    {{s[0], s[5]}, {s[1], s[2]}, {s[3], s[4]}}};
        case ConfigKind::seven_fan:
            return {{s[0], s[2], s[3], s[1]}, {{s[0], s[1]}, {s[2], s[3]}}};
    }
    PDEC_CHECK(false, "unknown pattern kind");
}

struct LevelRec {
    ConfigKind kind;
    std::vector<int> appendix;
    std::vector<std::vector<int>> nbrs;  // neighborhood snapshot per appendix entry
    std::vector<std::pair<int, int>> medges;
    PlaneGraph snapshot;  // paranoid mode only
};

void delete_vertex(PlaneGraph& g, int v) {
    for (int u : g.rot[v]) {
        auto& r = g.rot[u];
        r.erase(std::find(r.begin(), r.end(), v));
    }
    g.rot[v].clear();
}

} // namespace

const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::low_vertex: return "low-vertex";
        case ConfigKind::five_pair: return "five-pair";
        case ConfigKind::five_fan: return "five-fan";
        case ConfigKind::five_wheel: return "five-wheel";
        case ConfigKind::seven_fan: return "seven-fan";
    }
    return "?";
}

ReducibleConfig find_reducible(const PlaneGraph& t) {
    t.validate();
    if (!is_triangulation(t))
        throw GraphError("find_reducible needs a plane triangulation");
    if (t.n < 4)
        throw GraphError("find_reducible needs at least 4 vertices");
    std::optional<ReducibleConfig> c = scan_config(t);
    PDEC_CHECK(c.has_value(),
               "discharging contradiction: triangulation without a reducible pattern");
    return *c;
}

std::vector<std::pair<int, int>> fill_to_triangulation(PlaneGraph& g) {
    g.validate();
    if (g.n < 3)
        throw GraphError("fill_to_triangulation needs at least 3 vertices");
    std::vector<char> alive(g.n + 1, 1);
    std::vector<std::pair<int, int>> added = fill_impl(g, alive);
    g.validate();
    return added;
}

Decomp41Result decompose41(const PlaneGraph& g, const Decomp41Options& opt) {
    g.validate();
    const long long real_edges = g.edge_count();

    PlaneGraph h = g;
    std::vector<char> alive(h.n + 1, 1);
    alive[0] = 0;
    int live = h.n;
    std::vector<LevelRec> recs;
    std::unordered_set<long long> fill_edges;

    while (live > 0) {
        LevelRec rec;
        if (opt.paranoid) rec.snapshot = h;

        int peel = 0;
        for (int v = 1; v <= h.n && !peel; ++v)
            if (alive[v] && h.degree(v) <= 4) peel = v;

        if (peel) {
            rec.kind = ConfigKind::low_vertex;
            rec.appendix = {peel};
            rec.nbrs = {h.rot[peel]};
            delete_vertex(h, peel);
            alive[peel] = 0;
            --live;
        } else {
            // every degree is >= 5, which forces a dozen or more vertices
            PDEC_CHECK(live >= 12, "minimum degree 5 on fewer than 12 vertices");
            for (auto e : fill_impl(h, alive)) {
                bool fresh = fill_edges.insert(edge_key(e.first, e.second)).second;
                PDEC_CHECK(fresh, "completion edge repeated across levels");
            }
            std::optional<ReducibleConfig> c = scan_config(h);
            PDEC_CHECK(c.has_value(),
                       "discharging contradiction: triangulation without a reducible pattern");
            Extension ext = extension_for(*c);
            rec.kind = c->kind;
            rec.appendix = ext.appendix;
            rec.medges = ext.medges;
            for (int a : rec.appendix) rec.nbrs.push_back(h.rot[a]);
            for (int s : c->vertices) {
                delete_vertex(h, s);
                alive[s] = 0;
                --live;
            }
        }
        recs.push_back(std::move(rec));
    }

    // unwind: deepest deletion enters the order first
    Decomp41Result res;
    res.order.reserve(g.n);
    std::vector<char> placed(g.n + 1, 0);
    std::vector<int> hdeg(g.n + 1, 0);
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
        const LevelRec& rec = *it;
        for (auto e : rec.medges) {
            res.pair.hedges.emplace_back(std::min(e.first, e.second),
                                         std::max(e.first, e.second));
            PDEC_CHECK(++hdeg[e.first] <= 1, "matching edges collide at a vertex");
            PDEC_CHECK(++hdeg[e.second] <= 1, "matching edges collide at a vertex");
        }
        std::vector<int> counts;
        for (size_t k = 0; k < rec.appendix.size(); ++k) {
            int a = rec.appendix[k];
            PDEC_CHECK(!placed[a], "vertex appended twice");
            int partner = 0;
            for (auto e : rec.medges) {
                if (e.first == a) partner = e.second;
                if (e.second == a) partner = e.first;
            }
            int cnt = 0;
            for (int u : rec.nbrs[k]) {
                if (u == partner) continue;
                if (placed[u]) {
                    res.pair.arcs.emplace_back(a, u);
                    ++cnt;
                }
            }
            PDEC_CHECK(cnt <= 4, "appended vertex sees five earlier neighbors");
            counts.push_back(cnt);
            placed[a] = 1;
            res.order.push_back(a);
        }
        if (rec.kind == ConfigKind::seven_fan)
            PDEC_CHECK(counts == std::vector<int>({4, 4, 4, 4}),
                       "seven-fan append counts drifted from the degree arithmetic");

        if (opt.paranoid) {
            DecompPair level;
            for (auto a : res.pair.arcs)
                if (rec.snapshot.has_edge(a.first, a.second)) level.arcs.push_back(a);
            for (auto e : res.pair.hedges)
                if (rec.snapshot.has_edge(e.first, e.second)) level.hedges.push_back(e);
            level.canonicalize();
            ConditionReport rep = check_dh(rec.snapshot, level, 4, 1);
            PDEC_CHECK(rep.ok(), "level recheck failed: " + rep.first_violation());
        }
    }

    if (!fill_edges.empty()) {
        auto is_fill = [&](const std::pair<int, int>& e) {
            return fill_edges.count(edge_key(e.first, e.second)) != 0;
        };
        std::erase_if(res.pair.arcs, is_fill);
        std::erase_if(res.pair.hedges, is_fill);
    }
    PDEC_CHECK((long long)res.pair.arcs.size() + (long long)res.pair.hedges.size() ==
                   real_edges,
               "decomposition does not cover the input edges exactly");
    PDEC_CHECK((int)res.order.size() == g.n, "ordering misses vertices");
    res.pair.canonicalize();
    return res;
}

ChargeTable discharge_audit(const PlaneGraph& t) {
    t.validate();
    if (!is_triangulation(t))
        throw GraphError("discharge_audit needs a plane triangulation");

    ChargeTable ct;
    ct.n = t.n;
    std::vector<int> deg = graph_degrees(t);
    ct.initial.assign(t.n + 1, 0);
    ct.d5.assign(t.n + 1, 0);
    std::vector<Frac> fin(t.n + 1);
    bool pair55 = false;
    for (int v = 1; v <= t.n; ++v) {
        ct.initial[v] = deg[v] - 6;
        ct.total += ct.initial[v];
        for (int u : t.rot[v]) {
            if (deg[u] == 5) ++ct.d5[v];
            if (deg[v] == 5 && deg[u] == 5) pair55 = true;
        }
        fin[v] = Frac{ct.initial[v], 1};
    }
    PDEC_CHECK(ct.total == 2 * t.edge_count() - 6LL * t.n, "charge sum mismatch");
    PDEC_CHECK(ct.total == -12, "a triangulation always carries total charge -12");

    // each vertex of degree >= 6 splits its charge among its 5-neighbors
    for (int v = 1; v <= t.n; ++v) {
        if (deg[v] < 6 || ct.d5[v] == 0) continue;
        Frac share = Frac::make(deg[v] - 6, ct.d5[v]);
        for (int u : t.rot[v])
            if (deg[u] == 5) {
                fin[u] += share;
                fin[v] += -share;
            }
    }

    if (!pair55)
        for (int v = 1; v <= t.n; ++v)
            PDEC_CHECK(ct.d5[v] <= deg[v] / 2,
                       "independent 5-neighbors exceed half the rotation");

    ct.final_num.assign(t.n + 1, 0);
    ct.final_den.assign(t.n + 1, 1);
    Frac sum;
    ct.all_final_nonneg = true;
    for (int v = 1; v <= t.n; ++v) {
        ct.final_num[v] = fin[v].num;
        ct.final_den[v] = fin[v].den;
        if (fin[v].num < 0) ct.all_final_nonneg = false;
        sum += fin[v];
    }
    PDEC_CHECK(sum.den == 1 && sum.num == ct.total, "transfers broke conservation");
    PDEC_CHECK(!ct.all_final_nonneg,
               "negative total charge forces a negative vertex");
    return ct;
}

} // namespace pdec
