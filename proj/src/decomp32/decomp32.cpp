#include "decomp32/decomp32.hpp"

#include "decomp/cycle_ops.hpp"
#include "decomp/pair_ops.hpp"
#include "verify/verify.hpp"

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

namespace pdec {

namespace {

/*
 * The recursion peels or splits the frame, solves the pieces and glues the
 * pairs back together. Vertex ids survive every surgery, so child pairs are
 * concatenated directly. Every deterministic pick (which chord, which
 * neighbor) takes the smallest id so repeated runs are byte-identical.
 */

void validate_root(const NearTriangulation& t, const Cycle& c,
                   const std::vector<std::pair<int, int>>& chords, int x, int y,
                   int z, const std::optional<int>& zp) {
    if (x < 1 || x > t.g.n || y < 1 || y > t.g.n || z < 1 || z > t.g.n)
        throw GraphError("root vertex out of range");
    if (!c.on(x) || !c.on(y) || !c.adjacent(x, y))
        throw GraphError("xy must be a boundary edge");
    if (!c.on(z) || z == x || z == y)
        throw GraphError("z must be a boundary vertex distinct from x and y");
    for (auto [u, v] : chords)
        if (u == z || v == z)
            throw GraphError("z must not be incident with a chord");
    auto [z1, z2] = c.neighbors(z);
    bool root_adjacent = z1 == x || z1 == y || z2 == x || z2 == y;
    if (root_adjacent) {
        if (zp) throw GraphError("z' must be omitted when z has a root boundary neighbor");
    } else {
        if (!zp) throw GraphError("z' is required when z has no root boundary neighbor");
        if (*zp != z1 && *zp != z2)
            throw GraphError("z' must be a boundary neighbor of z");
    }
}

DecompPair rec(const NearTriangulation& t, int x, int y, int z,
               std::optional<int> zp, const Decomp32Options& opt, int depth);

// boundary triangle around a nonempty interior: delete z, recurse on the
// fan frame and aim every interior edge at z
DecompPair case_peel(const NearTriangulation& t, int x, int y, int z,
                     const Decomp32Options& opt, int depth) {
    NearTriangulation rest = remove_boundary_vertex(t, z);
    int w = choose_z(rest, x, y);
    Cycle cr(rest);
    auto [w1, w2] = cr.neighbors(w);
    std::optional<int> wp;
    if (w1 != x && w1 != y && w2 != x && w2 != y) wp = std::min(w1, w2);

    DecompPair out = rec(rest, x, y, w, wp, opt, depth + 1);
    out.arcs.push_back({z, y});
    out.arcs.push_back({z, x});
    for (int u : cr.walk)
        if (u != x && u != y) out.arcs.push_back({u, z});
    return out;
}

// split along a chord; both closed sides keep the chord edge, so the side
// rooted at it contributes the chord arc, which is dropped once
struct SplitPick {
    int u = 0, v = 0;
    NearTriangulation side_xy, side_far;
};

/*
 * Candidate chords cut the boundary walk into a near arc (holding the root
 * edge) and a far arc. Linearized with the root edge at the ends, the far
 * arcs become intervals, and since chords of a plane frame never cross, the
 * intervals form a laminar family. Containment strictly grows the far-side
 * vertex count, so a size-minimal far side sits at a leaf of the laminar
 * forest and a size-minimal root side at a root, and the regions inspected
 * either way are pairwise disjoint. That makes the whole selection one
 * linear sweep instead of one flood per candidate.
 */
struct ChordScore {
    int u = 0, v = 0;
    int far_size = 0;  // live vertices of the closed far side
};

std::vector<ChordScore> score_chords(const NearTriangulation& t, const Cycle& c,
                                     const std::vector<std::pair<int, int>>& cands,
                                     int x, int y, bool want_leaves) {
    int L = c.size();
    int px = c.pos[x], py = c.pos[y];
    int start = ((px + 1) % L == py) ? py : px;
    auto q = [&](int p) { return (p - start + L) % L; };

    struct Iv {
        int lo, hi, u, v;
    };
    std::vector<Iv> ivs;
    ivs.reserve(cands.size());
    for (auto [u, v] : cands) {
        int a = q(c.pos[u]), b = q(c.pos[v]);
        if (a > b) std::swap(a, b);
        PDEC_CHECK(b - a >= 2 && !(a == 0 && b == L - 1),
                   "chord endpoints are non-consecutive on the walk");
        ivs.push_back({a, b, u, v});
    }
    std::sort(ivs.begin(), ivs.end(), [](const Iv& l, const Iv& r) {
        return l.lo != r.lo ? l.lo < r.lo : l.hi > r.hi;
    });

    std::vector<char> has_child(ivs.size(), 0), is_root(ivs.size(), 0);
    std::vector<int> stack;
    for (int i = 0; i < (int)ivs.size(); ++i) {
        while (!stack.empty() && ivs[stack.back()].hi <= ivs[i].lo) stack.pop_back();
        if (stack.empty()) {
            is_root[i] = 1;
        } else {
            PDEC_CHECK(ivs[stack.back()].hi >= ivs[i].hi,
                       "boundary chords never cross");
            has_child[stack.back()] = 1;
        }
        stack.push_back(i);
    }

    std::vector<int> mark(t.g.n + 1, 0);
    std::vector<int> queue;
    std::vector<ChordScore> out;
    int epoch = 0;
    for (int i = 0; i < (int)ivs.size(); ++i) {
        if (want_leaves ? has_child[i] : !is_root[i]) continue;
        const Iv& iv = ivs[i];
        epoch++;
        mark[iv.u] = mark[iv.v] = epoch;
        queue.clear();
        for (int p = iv.lo + 1; p < iv.hi; ++p) {
            int s = c.walk[(start + p) % L];
            mark[s] = epoch;
            queue.push_back(s);
        }
        int count = 2 + (int)queue.size();
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (int b : t.g.rot[queue[qi]])
                if (mark[b] != epoch) {
                    mark[b] = epoch;
                    queue.push_back(b);
                    count++;
                }
        }
        out.push_back({iv.u, iv.v, count});
    }
    PDEC_CHECK(!out.empty(), "laminar family has a leaf and a root");
    return out;
}

SplitPick split_best(const NearTriangulation& t, int x, int y,
                     const ChordScore& best, int expect_far) {
    auto sides = split_at_chord(t, best.u, best.v);
    int probe = (x != best.u && x != best.v) ? x : y;
    bool first_is_xy = sides.first.g.degree(probe) > 0;
    PDEC_CHECK(first_is_xy != (sides.second.g.degree(probe) > 0),
               "chord sides must separate the root edge");
    SplitPick pick;
    pick.u = best.u;
    pick.v = best.v;
    pick.side_xy = first_is_xy ? std::move(sides.first) : std::move(sides.second);
    pick.side_far = first_is_xy ? std::move(sides.second) : std::move(sides.first);
    PDEC_CHECK(live_count(pick.side_far.g) == expect_far,
               "far-side flood count matches the actual split");
    return pick;
}

SplitPick pick_chord(const NearTriangulation& t, const Cycle& c,
                     const std::vector<std::pair<int, int>>& cands, int x, int y) {
    auto scored = score_chords(t, c, cands, x, y, /*want_leaves=*/true);
    const ChordScore* best = &scored[0];
    for (const auto& s : scored)
        if (s.far_size < best->far_size ||
            (s.far_size == best->far_size &&
             std::pair{s.u, s.v} < std::pair{best->u, best->v}))
            best = &s;
    return split_best(t, x, y, *best, best->far_size);
}

// variant minimizing the root side instead of the far side
SplitPick pick_chord_min_xy(const NearTriangulation& t, const Cycle& c,
                            const std::vector<std::pair<int, int>>& cands, int x,
                            int y) {
    auto scored = score_chords(t, c, cands, x, y, /*want_leaves=*/false);
    int total = live_count(t.g);
    const ChordScore* best = &scored[0];
    auto xy_size = [&](const ChordScore& s) { return total - s.far_size + 2; };
    for (const auto& s : scored)
        if (xy_size(s) < xy_size(*best) ||
            (xy_size(s) == xy_size(*best) &&
             std::pair{s.u, s.v} < std::pair{best->u, best->v}))
            best = &s;
    return split_best(t, x, y, *best, best->far_size);
}

// detach the far side's contribution: its root arc is the shared chord, and
// its other two root degrees must be clean so the glue cannot form a cycle
void strip_chord_root(DecompPair& p, int n, int u, int v) {
    PairDegrees pd(p, n);
    PDEC_CHECK(pd.outdeg[u] == 1 && has_arc(p, u, v),
               "far side must orient exactly the chord out of u");
    PDEC_CHECK(pd.outdeg[v] == 0, "far side must keep v a sink");
    PDEC_CHECK(pd.hdeg[u] == 0 && pd.hdeg[v] == 0,
               "far side must keep the chord ends out of H");
    remove_arc(p, u, v);
}

DecompPair case_chord(const NearTriangulation& t, const Cycle& c,
                      const std::vector<std::pair<int, int>>& chords, int x,
                      int y, int z, std::optional<int> zp,
                      const Decomp32Options& opt, int depth) {
    int px = c.pos[x], py = c.pos[y], pz = c.pos[z];

    std::vector<std::pair<int, int>> together, apart;
    for (auto [u, v] : chords) {
        int pu = c.pos[u], pv = c.pos[v];
        bool xy_first = c.on_arc(px, pu, pv) && c.on_arc(py, pu, pv);
        bool xy_second = c.on_arc(px, pv, pu) && c.on_arc(py, pv, pu);
        PDEC_CHECK(xy_first != xy_second, "root edge must sit on one chord side");
        bool z_with_xy = xy_first ? c.on_arc(pz, pu, pv) : c.on_arc(pz, pv, pu);
        (z_with_xy ? together : apart).push_back({u, v});
    }

    if (!together.empty()) {
        // some chord keeps the whole root on one side: recurse there with the
        // unchanged root, and root the minimal far side at the chord itself
        SplitPick pick = pick_chord(t, c, together, x, y);
        PDEC_CHECK(find_chords(pick.side_far).empty(),
                   "minimal far side must be chord-free");
        DecompPair out = rec(pick.side_xy, x, y, z, zp, opt, depth + 1);

        Cycle cf(pick.side_far);
        auto [a, b] = cf.neighbors(pick.v);
        int zpp = (a == pick.u) ? b : a;
        PDEC_CHECK(zpp != pick.u && zpp != pick.v,
                   "far side of a chord has a third boundary vertex");
        DecompPair far = rec(pick.side_far, pick.u, pick.v, zpp, std::nullopt,
                             opt, depth + 1);
        strip_chord_root(far, t.g.n, pick.u, pick.v);
        absorb(out, far);
        return out;
    }

    // every chord separates z from the root edge: shrink the root side to a
    // chord-free frame and hand z to the far side rooted at the chord
    SplitPick pick = pick_chord_min_xy(t, c, apart, x, y);
    PDEC_CHECK(find_chords(pick.side_xy).empty(),
               "minimal root side must be chord-free");

    Cycle cx(pick.side_xy);
    auto [a, b] = cx.neighbors(x);
    int w = (a == y) ? b : a;
    PDEC_CHECK(w != x && w != y, "root side keeps a third boundary vertex");
    DecompPair out = rec(pick.side_xy, x, y, w, std::nullopt, opt, depth + 1);

    auto [zn1, zn2] = c.neighbors(z);
    bool z_touches_chord =
        zn1 == pick.u || zn1 == pick.v || zn2 == pick.u || zn2 == pick.v;
    std::optional<int> zp_far;
    if (!z_touches_chord) {
        PDEC_CHECK(zp.has_value(),
                   "detached z keeps its boundary neighbors, so z' was given");
        zp_far = zp;
    }
    DecompPair far = rec(pick.side_far, pick.u, pick.v, z, zp_far, opt, depth + 1);
    strip_chord_root(far, t.g.n, pick.u, pick.v);
    absorb(out, far);
    return out;
}

// chordless boundary longer than a triangle: step the designated vertex z
// off the frame, or cut along a short separating triangle first
DecompPair case_step(const NearTriangulation& t, const Cycle& c, int x, int y,
                     int z, std::optional<int> zp, const Decomp32Options& opt,
                     int depth) {
    auto [zn1, zn2] = c.neighbors(z);
    int wstar, w;
    if (zp) {
        wstar = *zp;
        w = (zn1 == wstar) ? zn2 : zn1;
        PDEC_CHECK(w != x && w != y, "with z' given, neither neighbor of z touches the root");
    } else {
        bool r1 = zn1 == x || zn1 == y;
        bool r2 = zn2 == x || zn2 == y;
        PDEC_CHECK(r1 != r2, "exactly one boundary neighbor of z touches the root");
        wstar = r1 ? zn1 : zn2;
        w = r1 ? zn2 : zn1;
    }

    std::vector<int> fan;
    for (int u : t.g.rot[z])
        if (u != w && u != wstar) {
            PDEC_CHECK(!c.on(u), "interior fan neighbor sits on the boundary");
            fan.push_back(u);
        }
    PDEC_CHECK(!fan.empty(), "boundary vertex of a chordless frame has interior neighbors");

    NearTriangulation rest = remove_boundary_vertex(t, z);
    Cycle cr(rest);
    auto [wn1, wn2] = cr.neighbors(w);
    bool n1_new = !c.on(wn1), n2_new = !c.on(wn2);
    PDEC_CHECK(n1_new != n2_new, "one neighbor of w joins the boundary fresh");
    int wprime = n1_new ? wn1 : wn2;  // was interior before z left
    int wother = n1_new ? wn2 : wn1;  // w's surviving old boundary neighbor

    std::vector<int> partners;
    for (auto [a, b] : find_chords(rest)) {
        if (a == w) partners.push_back(b);
        if (b == w) partners.push_back(a);
    }

    if (partners.empty()) {
        // peel z and recurse with w as the next designated vertex
        std::optional<int> wp_arg;
        if (wother != x && wother != y) wp_arg = wprime;
        DecompPair sub = rec(rest, x, y, w, wp_arg, opt, depth + 1);

        PairDegrees pd(sub, t.g.n);
        int hw = pd.hdeg[w];
        PDEC_CHECK(hw <= 2, "child keeps H degree within bound at w");
        if (hw == 2)
            PDEC_CHECK(pd.outdeg[w] == 0,
                       "saturated H degree at w forces out-degree zero");

        DecompPair out = sub;
        for (int u : fan) out.arcs.push_back({u, z});

        auto hedge = [](int a, int b) {
            return std::pair{std::min(a, b), std::max(a, b)};
        };
        if (wstar == x || wstar == y) {
            out.arcs.push_back({z, wstar});
            if (hw <= 1)
                out.hedges.push_back(hedge(z, w));
            else
                out.arcs.push_back({w, z});
        } else {
            // wstar is the designated neighbor z'
            int zq = pd.outdeg[wstar];
            PDEC_CHECK(zq <= 2, "child keeps out-degree within bound at z'");
            if (zq <= 1) {
                out.arcs.push_back({wstar, z});
                if (hw <= 1)
                    out.hedges.push_back(hedge(z, w));
                else
                    out.arcs.push_back({w, z});
            } else {
                out.hedges.push_back(hedge(z, wstar));
                if (hw <= 1)
                    out.hedges.push_back(hedge(z, w));
                else
                    out.arcs.push_back({w, z});
            }
        }
        return out;
    }

    // w gained a chord: z, w and the chord partner v bound a separating
    // triangle; solve the outside with the same root and the inside rooted
    // at wv, then drop the triangle's own contribution from the inside
    int v = *std::min_element(partners.begin(), partners.end());
    PDEC_CHECK(!c.on(v), "chord partner was interior before z left");
    PDEC_CHECK(t.g.has_edge(z, v), "chord partner is a fan neighbor of z");
    PDEC_CHECK(v != wprime && v != wstar, "chord skips the immediate neighbors");

    std::vector<char> live(t.g.n + 1, 0);
    for (int s = 1; s <= t.g.n; ++s)
        live[s] = t.g.degree(s) > 0 && s != z && s != w && s != v;
    std::vector<int> comp(t.g.n + 1, -1);
    int ncomp = 0;
    for (int s = 1; s <= t.g.n; ++s) {
        if (!live[s] || comp[s] >= 0) continue;
        std::deque<int> q{s};
        comp[s] = ncomp;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b : t.g.rot[a])
                if (live[b] && comp[b] < 0) {
                    comp[b] = ncomp;
                    q.push_back(b);
                }
        }
        ncomp++;
    }
    PDEC_CHECK(ncomp == 2, "cut triangle splits the frame in two");
    PDEC_CHECK(comp[x] >= 0 && comp[x] == comp[y],
               "root edge stays on the boundary part");

    std::vector<int> inside, outside;
    for (int s = 1; s <= t.g.n; ++s) {
        if (comp[s] < 0) continue;
        (comp[s] == comp[x] ? outside : inside).push_back(s);
    }
    PDEC_CHECK(!inside.empty(), "cut triangle encloses at least one vertex");

    NearTriangulation outer_part = block_containing(t, inside, x);
    NearTriangulation inner_part = block_containing(t, outside, v);
    {
        const auto& iw = boundary_cycle(inner_part);
        PDEC_CHECK(iw.size() == 3, "inner part is bounded by the cut triangle");
    }

    DecompPair out = rec(outer_part, x, y, z, zp, opt, depth + 1);
    DecompPair inner = rec(inner_part, w, v, z, std::nullopt, opt, depth + 1);

    // the cut triangle lives in both parts; the outside copy keeps it
    PDEC_CHECK(has_arc(inner, w, v) && has_arc(inner, z, w) && has_arc(inner, z, v),
               "inside part orients the cut triangle outward");
    PDEC_CHECK(!has_hedge(inner, w, v) && !has_hedge(inner, z, w) &&
                   !has_hedge(inner, z, v),
               "inside part keeps the cut triangle out of H");
    remove_arc(inner, w, v);
    remove_arc(inner, z, w);
    remove_arc(inner, z, v);
    PairDegrees pdi(inner, t.g.n);
    PDEC_CHECK(pdi.outdeg[z] == 0 && pdi.outdeg[w] == 0 && pdi.outdeg[v] == 0,
               "stripped inside part keeps the cut triangle as sinks");
    PDEC_CHECK(pdi.hdeg[z] == 0, "inside part leaves z clean for the outside");
    absorb(out, inner);
    return out;
}

DecompPair rec(const NearTriangulation& t, int x, int y, int z,
               std::optional<int> zp, const Decomp32Options& opt, int depth) {
    PDEC_CHECK(depth <= t.g.n + 4, "recursion depth exceeds the vertex count");
    Cycle c(t);
    auto chords = find_chords(t);
    validate_root(t, c, chords, x, y, z, zp);

    DecompPair out;
    if (live_count(t.g) == 3) {
        out.arcs = {{x, y}, {z, x}, {z, y}};
    } else if (c.size() == 3) {
        out = case_peel(t, x, y, z, opt, depth);
    } else if (!chords.empty()) {
        out = case_chord(t, c, chords, x, y, z, zp, opt, depth);
    } else {
        out = case_step(t, c, x, y, z, zp, opt, depth);
    }

    out.canonicalize();
    if (opt.paranoid) {
        ConditionReport rep = check_32(t, x, y, z, zp, out);
        PDEC_CHECK(rep.ok(), "level result breaks a condition: " + rep.first_violation());
    }
    return out;
}

} // namespace

int choose_z(const NearTriangulation& t, int x, int y) {
    Cycle c(t);
    if (x < 1 || x > t.g.n || y < 1 || y > t.g.n || !c.on(x) || !c.on(y) ||
        !c.adjacent(x, y))
        throw GraphError("xy must be a boundary edge");
    std::vector<char> chorded(t.g.n + 1, 0);
    for (auto [u, v] : find_chords(t)) chorded[u] = chorded[v] = 1;
    int best = -1;
    for (int v : c.walk)
        if (v != x && v != y && !chorded[v] && (best < 0 || v < best)) best = v;
    PDEC_CHECK(best > 0, "a chord-free boundary vertex exists outside the root edge");
    return best;
}

DecompPair decompose32(const NearTriangulation& t, int x, int y, int z,
                       std::optional<int> zp, const Decomp32Options& opt) {
    t.validate();
    return rec(t, x, y, z, zp, opt, 0);
}

} // namespace pdec
