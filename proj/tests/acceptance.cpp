// Acceptance run: one line per criterion, nonzero exit when any fails.
// The corpus is 500 seeded stacked triangulations with n from 4 to 2000
// (cubic size skew), the three solids, and double wheels with rims 3..500.
#include "core/graph.hpp"
#include "core/surgery.hpp"
#include "decomp26/decomp26.hpp"
#include "decomp32/decomp32.hpp"
#include "decomp41/decomp41.hpp"
#include "gen/gen.hpp"
#include "io/format.hpp"
#include "oracle/oracle.hpp"
#include "verify/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace pdec;
using Clock = std::chrono::steady_clock;

namespace {

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<NearTriangulation> build_corpus() {
    std::vector<NearTriangulation> c;
    c.reserve(1001);
    for (int i = 0; i < 500; ++i) {
        int n = 4 + (int)std::llround(1996.0 * std::pow(i / 499.0, 3));
        c.push_back(stacked_triangulation(n, (std::uint64_t)i + 1));
    }
    for (const char* s : {"tetrahedron", "octahedron", "icosahedron"})
        c.push_back(named_solid(s));
    for (int k = 3; k <= 500; ++k) c.push_back(double_wheel(k));
    return c;
}

bool boundary_adjacent(const std::vector<int>& walk, int a, int b) {
    int k = (int)walk.size();
    for (int i = 0; i < k; ++i) {
        int u = walk[i], v = walk[(i + 1) % k];
        if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
}

// the six (x,y) rootings over a triangular outer face
std::vector<std::pair<int, int>> rootings(const NearTriangulation& t) {
    const std::vector<int>& w = t.outer;
    return {{w[0], w[1]}, {w[1], w[0]}, {w[1], w[2]},
            {w[2], w[1]}, {w[2], w[0]}, {w[0], w[2]}};
}

int third_outer(const NearTriangulation& t, int x, int y) {
    for (int v : t.outer)
        if (v != x && v != y) return v;
    return -1;
}

Outcome criterion1(const std::vector<NearTriangulation>& corpus) {
    Outcome o;
    double worst = 0;
    for (const auto& t : corpus) {
        auto t0 = Clock::now();
        Decomp41Result r = decompose41(t.g, {.paranoid = t.g.n <= 120});
        double dt = secs_since(t0);
        worst = std::max(worst, dt);
        ConditionReport rep = check_dh(t.g, r.pair, 4, 1);
        // independent 4-degeneracy certificate for the acyclic part
        PlaneGraph dsub(t.g.n);
        for (auto [a, b] : r.pair.arcs) {
            dsub.rot[a].push_back(b);
            dsub.rot[b].push_back(a);
        }
        bool deg4 = degeneracy_ordering(dsub, 4).found;
        if (!rep.ok() || !deg4 || dt > 10.0) {
            o.ok = false;
            o.detail = "n=" + std::to_string(t.g.n) + " " +
                       (rep.ok() ? (deg4 ? "too slow" : "not 4-degenerate")
                                 : rep.first_violation());
            return o;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu graphs, slowest %.3fs", corpus.size(), worst);
    o.detail = buf;
    return o;
}

Outcome criterion2(const std::vector<NearTriangulation>& corpus) {
    Outcome o;
    long long roots = 0;
    for (const auto& t : corpus) {
        for (auto [x, y] : rootings(t)) {
            int z = choose_z(t, x, y);
            std::optional<int> zp;
            if (!boundary_adjacent(t.outer, x, z) && !boundary_adjacent(t.outer, y, z)) {
                int k = (int)t.outer.size();
                for (int i = 0; i < k; ++i)
                    if (t.outer[i] == z)
                        zp = std::min(t.outer[(i + 1) % k], t.outer[(i + k - 1) % k]);
            }
            DecompPair p = decompose32(t, x, y, z, zp, {.paranoid = t.g.n <= 120});
            ConditionReport rep = check_32(t, x, y, z, zp, p);
            ++roots;
            if (!rep.ok()) {
                o.ok = false;
                o.detail = "n=" + std::to_string(t.g.n) + " root " + std::to_string(x) +
                           "," + std::to_string(y) + ": " + rep.first_violation();
                return o;
            }
        }
    }
    o.detail = std::to_string(roots) + " rootings";
    return o;
}

Outcome criterion3(const std::vector<NearTriangulation>& corpus) {
    Outcome o;
    long long roots = 0;
    for (const auto& t : corpus) {
        for (auto [x, y] : rootings(t)) {
            int z = third_outer(t, x, y);
            DecompPair p = decompose26(t, x, y, z, {.paranoid = t.g.n <= 120});
            ConditionReport rep = check_26(t, x, y, z, p);
            DecompPair sw = swap_root(t, x, y, z, p);
            ConditionReport swrep = check_26(t, y, x, z, sw);
            ++roots;
            if (!rep.ok() || !swrep.ok()) {
                o.ok = false;
                o.detail = "n=" + std::to_string(t.g.n) + " root " + std::to_string(x) +
                           "," + std::to_string(y) + ": " +
                           (rep.ok() ? "swapped: " + swrep.first_violation()
                                     : rep.first_violation());
                return o;
            }
        }
    }
    o.detail = std::to_string(roots) + " rootings incl. swaps";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::vector<NearTriangulation> small;
    std::set<std::string> seen;
    for (int n = 4; n <= 9; ++n)
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            NearTriangulation t = stacked_triangulation(n, seed);
            if (seen.insert(emit_rot(t)).second) small.push_back(std::move(t));
        }
    if (small.size() < 50) {
        o.ok = false;
        o.detail = "only " + std::to_string(small.size()) + " distinct graphs";
        return o;
    }
    int exhaustive_checked = 0;
    for (const auto& t : small) {
        const PlaneGraph& g = t.g;
        int x = t.outer[0], y = t.outer[1], z = t.outer[2];
        struct Probe {
            int d, h;
            DecompPair built;
        };
        std::vector<Probe> probes = {
            {4, 1, decompose41(g, {.paranoid = true}).pair},
            {3, 2, decompose32(t, x, y, choose_z(t, x, y), std::nullopt,
                               {.paranoid = true})},
            {2, 6, decompose26(t, x, y, z, {.paranoid = true})}};
        for (const auto& pr : probes) {
            OracleResult res = exact_decide(g, pr.d, pr.h);
            bool built_ok = check_dh(g, pr.built, pr.d, pr.h).ok();
            bool wit_ok = res.feasible && check_dh(g, res.witness, pr.d, pr.h).ok();
            if (!built_ok || !wit_ok) {
                o.ok = false;
                o.detail = "n=" + std::to_string(g.n) + " profile " +
                           std::to_string(pr.d) + "," + std::to_string(pr.h) +
                           (built_ok ? " oracle" : " constructive") + " rejected";
                return o;
            }
            if (g.edge_count() <= 16) {
                OracleOptions ex;
                ex.exhaustive = true;
                OracleResult full = exact_decide(g, pr.d, pr.h, ex);
                if (full.feasible != res.feasible || full.witness != res.witness) {
                    o.ok = false;
                    o.detail = "pruned vs exhaustive disagree at n=" +
                               std::to_string(g.n);
                    return o;
                }
                ++exhaustive_checked;
            }
        }
    }
    o.detail = std::to_string(small.size()) + " graphs, " +
               std::to_string(exhaustive_checked) + " exhaustive cross-checks";
    return o;
}

Outcome criterion5() {
    Outcome o;
    PlaneGraph icosa = named_solid("icosahedron").g;
    auto t0 = Clock::now();
    OracleResult r40 = exact_decide(icosa, 4, 0);
    double s40 = secs_since(t0);
    t0 = Clock::now();
    OracleResult r31 = exact_decide(icosa, 3, 1);
    double s31 = secs_since(t0);
    MinHResult mh = min_h(icosa, 4);
    bool ok40 = !r40.feasible && s40 < 1.0;
    bool ok31 = !r31.feasible && s31 <= 60.0;
    bool okmh = mh.h == 1 && check_dh(icosa, mh.witness, 4, 1).ok();
    o.ok = ok40 && ok31 && okmh;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "(4,0) infeasible %.2fs, (3,1) infeasible %.2fs, min h at d=4 is %d",
                  s40, s31, mh.h);
    o.detail = buf;
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::vector<PlaneGraph> bases = {stacked_triangulation(4, 1).g,
                                     named_solid("icosahedron").g,
                                     stacked_triangulation(20, 7).g};
    for (const PlaneGraph& base : bases) {
        long long n = base.n;
        StellateResult s = stellate(base);
        bool counts = s.g.n - n == 2 * n - 4 && s.g.edge_count() == 9 * n - 18;
        bool deg3 = true;
        for (int v = s.orig_n + 1; v <= s.g.n; ++v) deg3 &= s.g.degree(v) == 3;
        if (!counts || !deg3) {
            o.ok = false;
            o.detail = "stellation counts off at base n=" + std::to_string(n);
            return o;
        }
    }
    for (int n = 3; n <= 30; ++n)
        if (infeasibility_bound_23(n) != (n >= 11)) {
            o.ok = false;
            o.detail = "density bound wrong at n=" + std::to_string(n);
            return o;
        }
    StellateResult si = stellate(named_solid("icosahedron").g);
    NearTriangulation t;
    t.g = si.g;
    t.outer = canonical_outer_triangle(si.g);
    int x = t.outer[0], y = t.outer[1], z = t.outer[2];
    DecompPair p = decompose26(t, x, y, z, {.paranoid = true});
    ConditionReport rep = check_26(t, x, y, z, p);
    if (!rep.ok()) {
        o.ok = false;
        o.detail = "stellated icosahedron: " + rep.first_violation();
        return o;
    }
    o.detail = "counts exact, bound flips at n=11, stellated icosahedron splits";
    return o;
}

Outcome criterion7(const std::vector<NearTriangulation>& corpus) {
    Outcome o;
    for (const auto& t : corpus) {
        ChargeTable ct = discharge_audit(t.g);
        ReducibleConfig cfg = find_reducible(t.g);
        if (ct.total != -12 || cfg.vertices.empty()) {
            o.ok = false;
            o.detail = "n=" + std::to_string(t.g.n) + " total " +
                       std::to_string(ct.total);
            return o;
        }
    }
    o.detail = std::to_string(corpus.size()) + " charge totals all -12";
    return o;
}

Outcome criterion8(const std::vector<NearTriangulation>& corpus) {
    Outcome o;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& t = corpus[i];
        std::string bytes = emit_rot(t);
        RotFile back = parse_rot_string(bytes);
        if (emit_rot(back.g, back.outer ? &*back.outer : nullptr) != bytes) {
            o.ok = false;
            o.detail = "rot round trip differs at n=" + std::to_string(t.g.n);
            return o;
        }
        std::string dh = emit_dh(4, 1, decompose41(t.g).pair);
        DhFile f = parse_dh_string(dh);
        if (emit_dh(f.d, f.h, f.pair) != dh) {
            o.ok = false;
            o.detail = "dh round trip differs at n=" + std::to_string(t.g.n);
            return o;
        }
    }
    for (int i : {0, 123, 250, 499}) {
        int n = 4 + (int)std::llround(1996.0 * std::pow(i / 499.0, 3));
        NearTriangulation a = stacked_triangulation(n, (std::uint64_t)i + 1);
        if (emit_rot(a) != emit_rot(corpus[i])) {
            o.ok = false;
            o.detail = "regeneration differs at n=" + std::to_string(n);
            return o;
        }
    }
    o.detail = "rot+dh round trips identity, regeneration byte-stable";
    return o;
}

} // namespace

int main() {
    auto all0 = Clock::now();
    std::vector<NearTriangulation> corpus = build_corpus();

    struct Row {
        const char* name;
        Outcome (*fn_corpus)(const std::vector<NearTriangulation>&);
        Outcome (*fn_plain)();
    };
    std::vector<Row> rows = {
        {"(4,1) split verified on the full corpus", criterion1, nullptr},
        {"(3,2) split verified over all rootings", criterion2, nullptr},
        {"(2,6) split + root swap over all rootings", criterion3, nullptr},
        {"oracle cross-validation on small graphs", nullptr, criterion4},
        {"icosahedron sharpness: (4,0) and (3,1) infeasible", nullptr, criterion5},
        {"stellation counts, density bound, (2,6) sanity", nullptr, criterion6},
        {"charge audit: every total is -12, pattern found", criterion7, nullptr},
        {"determinism and parse/emit identity", criterion8, nullptr},
    };

    int failures = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        auto t0 = Clock::now();
        Outcome o = rows[i].fn_corpus ? rows[i].fn_corpus(corpus) : rows[i].fn_plain();
        failures += !o.ok;
        std::printf("criterion %zu: %-52s %s  [%.1fs%s%s]\n", i + 1, rows[i].name,
                    o.ok ? "PASS" : "FAIL", secs_since(t0), o.detail.empty() ? "" : "; ",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s (%d/8 criteria, %.1fs)\n", failures ? "FAIL" : "PASS", 8 - failures,
                secs_since(all0));
    return failures ? 1 : 0;
}
