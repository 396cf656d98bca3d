#include "decomp26/decomp26.hpp"

#include "decomp/cycle_ops.hpp"
#include "decomp/pair_ops.hpp"
#include "verify/verify.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace pdec {

namespace {

/*
 * The recursion keeps the root invariant tight: the pair it returns always
 * carries the arc (x,y), leaves y with no other incidences, gives x at most
 * one remainder edge, and caps z under 4 - b. Those guarantees are exactly
 * what lets a parent level splice child pairs together, so every splice
 * asserts them instead of trusting them. Deterministic picks (which chord,
 * which exposed vertex) take the first in scan order or the smallest id.
 */

void validate_root(const NearTriangulation& t, const Cycle& c, int x, int y,
                   int z) {
    if (x < 1 || x > t.g.n || y < 1 || y > t.g.n || z < 1 || z > t.g.n)
        throw GraphError("root vertex out of range");
    if (!c.on(x) || !c.on(y) || !c.adjacent(x, y))
        throw GraphError("xy must be a boundary edge");
    if (!c.on(z) || z == x || z == y)
        throw GraphError("z must be a boundary vertex distinct from x and y");
}

// unique H neighbor of v; asserts there is exactly one
int hedge_partner(const DecompPair& p, int v) {
    int w = 0, count = 0;
    for (auto [a, b] : p.hedges) {
        if (a == v) { w = b; count++; }
        else if (b == v) { w = a; count++; }
    }
    PDEC_CHECK(count == 1, "expected exactly one remainder edge at the vertex");
    return w;
}

// rewrite a pair valid for (x,y,*) into one valid for (y,x,*): the root arc
// reverses; if x holds a remainder edge, its partner w must already point at
// y, and that arc bends onto x while the remainder edge moves to wy
DecompPair swapped(int n, int x, int y, DecompPair p) {
    PairDegrees deg(p, n);
    remove_arc(p, x, y);
    p.arcs.push_back({y, x});
    if (deg.hdeg[x] == 0) return p;
    PDEC_CHECK(deg.hdeg[x] == 1, "the root source carries at most one remainder edge");
    int w = hedge_partner(p, x);
    PDEC_CHECK(has_arc(p, w, y), "the root source's helper points at the sink");
    remove_arc(p, w, y);
    remove_hedge(p, w, x);
    p.arcs.push_back({w, x});
    p.hedges.push_back({std::min(w, y), std::max(w, y)});
    return p;
}

DecompPair rec(const NearTriangulation& t, int x, int y, int z,
               const Decomp26Options& opt, int depth);

// solve the same frame with the root ends exchanged, then reroute the result
// back into the caller's frame; used whenever a case needs x off some special
// vertex, which the exchanged frame always achieves
DecompPair swap_frame(const NearTriangulation& t, int x, int y, int z,
                      const Decomp26Options& opt, int depth) {
    return swapped(t.g.n, y, x, rec(t, y, x, z, opt, depth));
}

/*
 * Shared tail of the two peel cases. z has been deleted from t giving rest;
 * the child solves rest with `third` as its far root. z's edges come back as
 * a fan of arcs into z, the arc (z,y), and one remainder edge to `partner`
 * (z's surviving boundary neighbor, or x when the boundary was a triangle).
 * If the child pinned x to a helper s, the helper sits on the fan: its
 * remainder edge moves onto z and s takes an arc into x instead, so x stays
 * nearly clean.
 */
DecompPair peel_and_reroute(const NearTriangulation& t,
                            const NearTriangulation& rest, int x, int y, int z,
                            int third, int partner, const std::vector<int>& fan,
                            const Decomp26Options& opt, int depth) {
    DecompPair out = rec(rest, x, y, third, opt, depth + 1);
    PairDegrees deg(out, t.g.n);
    PDEC_CHECK(deg.hdeg[x] <= 1, "the root source carries at most one remainder edge");
    int skip = 0;
    if (deg.hdeg[x] == 1) {
        int s = hedge_partner(out, x);
        PDEC_CHECK(std::find(fan.begin(), fan.end(), s) != fan.end(),
                   "the root source's helper sits on the fan of the peeled vertex");
        PDEC_CHECK(t.g.has_edge(s, y), "the helper touches both root ends");
        remove_hedge(out, s, x);
        out.arcs.push_back({s, x});
        out.hedges.push_back({std::min(s, z), std::max(s, z)});
        skip = s;
    }
    for (int u : fan) {
        PDEC_CHECK(t.g.has_edge(u, z), "fan vertices are neighbors of the peeled vertex");
        if (u != skip) out.arcs.push_back({u, z});
    }
    out.arcs.push_back({z, y});
    out.hedges.push_back({std::min(z, partner), std::max(z, partner)});
    return out;
}

// boundary triangle around a nonempty interior: peel z, root the rest at the
// smallest exposed vertex, fan everything exposed back into z
DecompPair case_corner(const NearTriangulation& t, int x, int y, int z,
                       const Decomp26Options& opt, int depth) {
    NearTriangulation rest = remove_boundary_vertex(t, z);
    const Cycle cr(rest);
    int third = 0;
    std::vector<int> fan;
    for (int u : cr.walk)
        if (u != x && u != y) {
            fan.push_back(u);
            if (third == 0 || u < third) third = u;
        }
    PDEC_CHECK(third > 0, "peeling the corner exposes at least one vertex");
    return peel_and_reroute(t, rest, x, y, z, third, x, fan, opt, depth);
}

// chordless boundary with z right next to the root edge: peel z and hand the
// far-root role to z's other boundary neighbor
DecompPair case_edge(const NearTriangulation& t, const Cycle& c, int x, int y,
                     int z, const Decomp26Options& opt, int depth) {
    if (!c.adjacent(z, y)) return swap_frame(t, x, y, z, opt, depth);
    auto [n1, n2] = c.neighbors(z);
    int away = n1 == y ? n2 : n1;
    PDEC_CHECK(away != x && away != y,
               "a boundary longer than a triangle leaves z a free neighbor");
    std::vector<int> fan;
    for (int u : t.g.rot[z])
        if (u != y && u != away) fan.push_back(u);
    NearTriangulation rest = remove_boundary_vertex(t, z);
    return peel_and_reroute(t, rest, x, y, z, away, away, fan, opt, depth);
}

// a chord worth splitting at: it either pins z strictly beyond it or touches
// one of the roots; the first such chord in (min,max) scan order is used
struct ChordPick {
    int u = 0, v = 0;
    bool z_far = false;
};

std::optional<ChordPick> pick_chord(const NearTriangulation& t, const Cycle& c,
                                    int x, int y, int z) {
    auto chords = find_chords(t);
    if (chords.empty()) return std::nullopt;
    const int L = c.size();
    // positions measured from the root edge, so far arcs never wrap
    int px = c.pos[x], py = c.pos[y];
    int start = (px + 1) % L == py ? py : px;
    auto q = [&](int v) { return (c.pos[v] - start + L) % L; };
    int qz = q(z);
    for (auto [u, v] : chords) {
        int a = q(u), b = q(v);
        if (a > b) std::swap(a, b);
        bool z_far = a < qz && qz < b;
        if (z_far || u == x || u == y || u == z || v == x || v == y || v == z)
            return ChordPick{u, v, z_far};
    }
    return std::nullopt;
}

// both closed sides keep the chord; label them by where the probe lives
std::pair<NearTriangulation, NearTriangulation>
split_sides(const NearTriangulation& t, int u, int v, int probe) {
    auto parts = split_at_chord(t, u, v);
    bool in_first = parts.first.g.degree(probe) > 0;
    PDEC_CHECK(in_first != (parts.second.g.degree(probe) > 0),
               "the probe vertex sits strictly on one side of the chord");
    if (in_first) return parts;
    return {std::move(parts.second), std::move(parts.first)};
}

// the far side's root arc duplicates the chord the near side already covers
void strip_root_arc(DecompPair& p, int n, int r1, int r2) {
    PairDegrees deg(p, n);
    PDEC_CHECK(deg.outdeg[r1] == 1 && has_arc(p, r1, r2),
               "the far root source points only at its sink");
    PDEC_CHECK(deg.outdeg[r2] == 0, "the far root sink keeps no outgoing arcs");
    PDEC_CHECK(deg.hdeg[r2] == 0,
               "the far root sink stays clean in the remainder graph");
    PDEC_CHECK(deg.hdeg[r1] <= 1,
               "the far root source carries at most one remainder edge");
    remove_arc(p, r1, r2);
}

/*
 * Split at the picked chord uv. The three shapes differ in where z lives:
 * beyond the chord (the near side is rooted toward v and the far side takes
 * z), at the chord itself (the far side is rooted along the chord with a
 * fresh far vertex), or on the root side (the chord must touch y, and the
 * far side gets its smallest boundary vertex as far root). In each shape the
 * far side's rooting direction depends on how loaded u came out of the near
 * side, and whenever the chord sits at x the whole frame is solved swapped.
 */
DecompPair case_chord(const NearTriangulation& t, const Cycle& c, ChordPick ch,
                      int x, int y, int z, const Decomp26Options& opt,
                      int depth) {
    int u = ch.u, v = ch.v;
    if (z == u || z == v) {
        if (u == z) std::swap(u, v);
        if (u == x) return swap_frame(t, x, y, z, opt, depth);
        auto [near, far] = split_sides(t, u, v, x);
        auto [zn1, zn2] = c.neighbors(z);
        int zfar = far.g.degree(zn1) > 0 ? zn1 : zn2;
        int znear = zfar == zn1 ? zn2 : zn1;
        PDEC_CHECK(far.g.degree(zfar) > 0 && near.g.degree(znear) > 0 &&
                       far.g.degree(znear) == 0,
                   "the chord leaves z one boundary neighbor per side");
        DecompPair out = rec(near, x, y, z, opt, depth + 1);
        PairDegrees d1(out, t.g.n);
        int r1 = u, r2 = z;
        if (!(d1.hdeg[u] <= 4 - b_value(near, x, y, u) && u != y)) {
            r1 = z;
            r2 = u;
        }
        DecompPair part = rec(far, r1, r2, zfar, opt, depth + 1);
        strip_root_arc(part, t.g.n, r1, r2);
        absorb(out, part);
        // the near side's own caps rule out the one loading pattern the
        // final conditions would reject at z
        PairDegrees dz(out, t.g.n);
        PDEC_CHECK(!(dz.hdeg[z] == 4 - b_value(t, x, y, z) &&
                     dz.hdeg[znear] == 5 - b_value(t, x, y, znear)),
                   "the far corner and its near-side neighbor cannot both fill up");
        return out;
    }
    if (ch.z_far) {
        if (v == x || v == y) std::swap(u, v);
        if (u == x) return swap_frame(t, x, y, z, opt, depth);
        auto [near, far] = split_sides(t, u, v, x);
        PDEC_CHECK(far.g.degree(z) > 0 && near.g.degree(z) == 0,
                   "z sits strictly beyond the chord");
        DecompPair out = rec(near, x, y, v, opt, depth + 1);
        PairDegrees d1(out, t.g.n);
        int r1 = u, r2 = v;
        if (!(d1.hdeg[u] <= 4 - b_value(near, x, y, u) && y != u)) {
            r1 = v;
            r2 = u;
        }
        DecompPair part = rec(far, r1, r2, z, opt, depth + 1);
        strip_root_arc(part, t.g.n, r1, r2);
        absorb(out, part);
        return out;
    }
    PDEC_CHECK(u == x || u == y || v == x || v == y,
               "a chord keeping z on the root side touches the root edge");
    if (v == x || v == y) std::swap(u, v);
    if (u == x) return swap_frame(t, x, y, z, opt, depth);
    PDEC_CHECK(u == y, "the chord end on the root edge is y here");
    auto [near, far] = split_sides(t, u, v, x);
    PDEC_CHECK(near.g.degree(z) > 0 && far.g.degree(z) == 0,
               "z sits strictly on the root side of the chord");
    DecompPair out = rec(near, x, y, z, opt, depth + 1);
    const Cycle cf(far);
    int zstar = 0;
    for (int w : cf.walk)
        if (w != u && w != v && (zstar == 0 || w < zstar)) zstar = w;
    PDEC_CHECK(zstar > 0, "the far side has a boundary vertex beyond the chord");
    DecompPair part = rec(far, v, u, zstar, opt, depth + 1);
    strip_root_arc(part, t.g.n, v, u);
    absorb(out, part);
    return out;
}

/*
 * Fan layout construction, assuming the frame orientation with the directed
 * edge (y,x) on the outer walk. The stretch path_p runs backward along the
 * walk from y's far boundary neighbor to z; removing it exposes the block,
 * whose boundary from y around to z's surviving neighbor zp is path_q. Inner
 * path_q vertices touching the stretch twice are markers; between two
 * consecutive contact vertices the touched stretch vertex is unique (edges
 * inside a disk cannot cross), which pins the bridges and makes every plain
 * inner vertex see exactly its bracket-end bridge. Each marker closes a
 * cycle with its bridge bracket, and everything inside that cycle is carved
 * out as one strip.
 */
FanStructure build_fan_impl(const NearTriangulation& t, const Cycle& c, int x,
                            int y, int z) {
    const int L = c.size();
    PDEC_CHECK(c.walk[(c.pos[y] + 1) % L] == x,
               "fan frame carries the directed boundary edge (y,x)");
    FanStructure f;
    for (int i = (c.pos[y] - 1 + L) % L;; i = (i - 1 + L) % L) {
        PDEC_CHECK(c.walk[i] != x && c.walk[i] != y,
                   "the stretch from y reaches z before the root edge");
        f.path_p.push_back(c.walk[i]);
        if (c.walk[i] == z) break;
    }
    PDEC_CHECK((int)f.path_p.size() >= 2,
               "z keeps its distance from y along the boundary");
    f.block = block_containing(t, f.path_p, x);
    int zp = c.walk[(c.pos[z] - 1 + L) % L];
    const Cycle cb(f.block);
    PDEC_CHECK(cb.on(zp), "z's far-side neighbor survives on the block boundary");
    PDEC_CHECK(cb.walk[(cb.pos[y] + 1) % cb.size()] == x,
               "the block keeps the root edge direction");
    for (int i = cb.pos[y];; i = (i - 1 + cb.size()) % cb.size()) {
        f.path_q.push_back(cb.walk[i]);
        if (cb.walk[i] == zp) break;
        PDEC_CHECK(cb.walk[i] != x,
                   "the block walk from y reaches z's neighbor before x");
    }
    PDEC_CHECK((int)f.path_q.size() >= 3,
               "the block boundary has an inner vertex between y and z's neighbor");

    std::vector<int> pidx(t.g.n + 1, -1);
    for (int i = 0; i < (int)f.path_p.size(); ++i) pidx[f.path_p[i]] = i;
    auto p_neighbors = [&](int q) {
        std::vector<int> r;
        for (int w : t.g.rot[q])
            if (pidx[w] >= 0) r.push_back(w);
        return r;
    };

    auto pn_y = p_neighbors(y);
    PDEC_CHECK(pn_y.size() == 1 && pn_y[0] == f.path_p.front(),
               "y touches the stretch only at its boundary neighbor");
    auto pn_zp = p_neighbors(zp);
    PDEC_CHECK(pn_zp.size() == 1 && pn_zp[0] == z,
               "z's far-side neighbor touches the stretch only at z");

    for (size_t i = 1; i + 1 < f.path_q.size(); ++i)
        if (p_neighbors(f.path_q[i]).size() >= 2)
            f.markers.push_back(f.path_q[i]);
    PDEC_CHECK(!f.markers.empty(),
               "a stretch of two or more vertices forces a doubled contact");

    std::vector<int> qseq;
    qseq.reserve(f.markers.size() + 2);
    qseq.push_back(y);
    qseq.insert(qseq.end(), f.markers.begin(), f.markers.end());
    qseq.push_back(zp);
    for (size_t i = 0; i + 1 < qseq.size(); ++i) {
        auto na = p_neighbors(qseq[i]);
        auto nb = p_neighbors(qseq[i + 1]);
        int common = 0, hits = 0;
        for (int a : na)
            for (int b : nb)
                if (a == b) {
                    common = a;
                    ++hits;
                }
        PDEC_CHECK(hits == 1,
                   "consecutive contact vertices share exactly one stretch vertex");
        f.bridges.push_back(common);
    }
    PDEC_CHECK(f.bridges.front() == f.path_p.front(),
               "the first bridge is y's far boundary neighbor");
    PDEC_CHECK(f.bridges.back() == z, "the last bridge is the far corner itself");
    for (size_t i = 0; i + 1 < f.bridges.size(); ++i)
        PDEC_CHECK(pidx[f.bridges[i]] < pidx[f.bridges[i + 1]],
                   "bridges advance along the stretch");

    {
        int seg = 0;
        for (size_t i = 1; i + 1 < f.path_q.size(); ++i) {
            int q = f.path_q[i];
            auto nb = p_neighbors(q);
            if (seg < (int)f.markers.size() && q == f.markers[seg]) {
                for (int w : nb)
                    PDEC_CHECK(pidx[f.bridges[seg]] <= pidx[w] &&
                                   pidx[w] <= pidx[f.bridges[seg + 1]],
                               "a contact vertex meets the stretch only inside its bracket");
                ++seg;
            } else {
                PDEC_CHECK(nb.size() == 1 && nb[0] == f.bridges[seg],
                           "a plain block vertex meets the stretch exactly at its bracket end");
            }
        }
    }

    for (size_t m = 0; m < f.markers.size(); ++m) {
        int qi = f.markers[m];
        std::vector<char> cut(t.g.n + 1, 0);
        cut[qi] = 1;
        for (int i = pidx[f.bridges[m]]; i <= pidx[f.bridges[m + 1]]; ++i)
            cut[f.path_p[i]] = 1;
        // everything x still reaches around the cut cycle is outside the strip
        std::vector<int> removed, stack{x};
        std::vector<char> seen(t.g.n + 1, 0);
        seen[x] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            removed.push_back(a);
            for (int b : t.g.rot[a])
                if (!seen[b] && !cut[b]) {
                    seen[b] = 1;
                    stack.push_back(b);
                }
        }
        NearTriangulation strip = block_containing(t, removed, qi);
        const auto& sb = boundary_cycle(strip);
        PDEC_CHECK((int)sb.size() ==
                       pidx[f.bridges[m + 1]] - pidx[f.bridges[m]] + 2,
                   "the strip boundary is its bracket plus the contact vertex");
        for (int w : sb)
            PDEC_CHECK(cut[w], "the strip boundary stays on the cut cycle");
        f.strips.push_back(std::move(strip));
    }
    return f;
}

/*
 * Chordless boundary with z away from the root edge. The block is solved
 * with zp as far root; each strip is solved rooted along its two contact
 * edges and then rewired so the marker ends with one arc down the stretch
 * and one remainder edge up; plain block vertices fan into their bracket
 * end; the stretch start points at y and z pairs with zp in the remainder.
 * If the block pinned x to a helper s, the helper's remainder edge becomes
 * an arc into x and its arc down the stretch reverses (or, at the very first
 * bracket, turns into a remainder edge so the first bridge keeps a single
 * outgoing arc).
 */
DecompPair case_fan(const NearTriangulation& t, const Cycle& c, int x, int y,
                    int z, const Decomp26Options& opt, int depth) {
    if (c.walk[(c.pos[y] + 1) % c.size()] != x)
        return swap_frame(t, x, y, z, opt, depth);
    FanStructure fan = build_fan_impl(t, c, x, y, z);
    const int k = (int)fan.markers.size();
    int zp = fan.path_q.back();

    DecompPair out = rec(fan.block, x, y, zp, opt, depth + 1);
    for (int i = 0; i < k; ++i) {
        int qi = fan.markers[i];
        int lo = fan.bridges[i], hi = fan.bridges[i + 1];
        DecompPair part = rec(fan.strips[i], hi, qi, lo, opt, depth + 1);
        remove_arc(part, hi, qi);
        part.hedges.push_back({std::min(hi, qi), std::max(hi, qi)});
        remove_arc(part, lo, qi);
        part.arcs.push_back({qi, lo});
        absorb(out, part);
    }
    out.arcs.push_back({fan.path_p.front(), y});
    {
        int seg = 0;
        for (size_t i = 1; i + 1 < fan.path_q.size(); ++i) {
            int q = fan.path_q[i];
            if (seg < k && q == fan.markers[seg]) {
                ++seg;
                continue;
            }
            out.arcs.push_back({q, fan.bridges[seg]});
        }
    }
    out.hedges.push_back({std::min(z, zp), std::max(z, zp)});

    PairDegrees deg(out, t.g.n);
    PDEC_CHECK(deg.hdeg[x] <= 1, "the root source carries at most one remainder edge");
    if (deg.hdeg[x] == 1) {
        int s = hedge_partner(out, x);
        int seg = 0, found = -1;
        for (size_t i = 1; i + 1 < fan.path_q.size(); ++i) {
            int q = fan.path_q[i];
            if (q == s) {
                found = seg;
                break;
            }
            if (seg < k && q == fan.markers[seg]) ++seg;
        }
        PDEC_CHECK(found >= 0,
                   "the root source's helper sits between y and z's neighbor");
        remove_hedge(out, s, x);
        out.arcs.push_back({s, x});
        if (found >= 1) {
            remove_arc(out, s, fan.bridges[found]);
            out.arcs.push_back({fan.bridges[found], s});
        } else {
            remove_arc(out, s, fan.bridges[0]);
            out.hedges.push_back(
                {std::min(s, fan.bridges[0]), std::max(s, fan.bridges[0])});
        }
    }
    return out;
}

DecompPair rec(const NearTriangulation& t, int x, int y, int z,
               const Decomp26Options& opt, int depth) {
    PDEC_CHECK(depth <= t.g.n + 4, "recursion depth exceeds the vertex count");
    const Cycle c(t);
    validate_root(t, c, x, y, z);

    DecompPair out;
    if (live_count(t.g) == 3) {
        out.arcs = {{x, y}, {z, y}};
        out.hedges = {{std::min(x, z), std::max(x, z)}};
    } else if (c.size() == 3) {
        out = case_corner(t, x, y, z, opt, depth);
    } else if (auto ch = pick_chord(t, c, x, y, z)) {
        out = case_chord(t, c, *ch, x, y, z, opt, depth);
    } else if (c.adjacent(z, x) || c.adjacent(z, y)) {
        out = case_edge(t, c, x, y, z, opt, depth);
    } else {
        out = case_fan(t, c, x, y, z, opt, depth);
    }

    out.canonicalize();
    if (opt.paranoid) {
        ConditionReport rep = check_26(t, x, y, z, out);
        PDEC_CHECK(rep.ok(), "level result breaks a condition: " + rep.first_violation());
    }
    return out;
}

} // namespace

DecompPair decompose26(const NearTriangulation& t, int x, int y, int z,
                       const Decomp26Options& opt) {
    t.validate();
    return rec(t, x, y, z, opt, 0);
}

DecompPair swap_root(const NearTriangulation& t, int x, int y, int z,
                     const DecompPair& p) {
    t.validate();
    ConditionReport rep = check_26(t, x, y, z, p);
    if (!rep.ok())
        throw GraphError("swap_root input breaks its root contract: " +
                         rep.first_violation());
    DecompPair out = swapped(t.g.n, x, y, p);
    out.canonicalize();
    return out;
}

FanStructure build_fan(const NearTriangulation& t, int x, int y, int z) {
    t.validate();
    const Cycle c(t);
    validate_root(t, c, x, y, z);
    if (c.size() < 4)
        throw GraphError("the fan layout needs a boundary cycle of length at least 4");
    if (pick_chord(t, c, x, y, z))
        throw GraphError("the fan layout forbids chords separating the root from z or touching it");
    if (c.adjacent(z, x) || c.adjacent(z, y))
        throw GraphError("the fan layout needs z away from the root's boundary neighbors");
    if (c.walk[(c.pos[y] + 1) % c.size()] != x)
        throw GraphError("the fan layout expects the directed boundary edge (y,x); swap the root ends");
    return build_fan_impl(t, c, x, y, z);
}

} // namespace pdec
