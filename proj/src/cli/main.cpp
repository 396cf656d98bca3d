// pdec: decompose, verify, oracle, gen, audit over .rot/.dh files.
// Exit codes: 0 success / feasible with a verified witness, 1 verification
// failed or infeasible, 2 usage or malformed input, 3 budget exceeded.
#include "core/graph.hpp"
#include "core/surgery.hpp"
#include "decomp26/decomp26.hpp"
#include "decomp32/decomp32.hpp"
#include "decomp41/decomp41.hpp"
#include "gen/gen.hpp"
#include "io/format.hpp"
#include "oracle/oracle.hpp"
#include "verify/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace pdec;
using ordered_json = nlohmann::ordered_json;

namespace {

// raised for --root/--profile combinations the verbs reject
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * One result record per run. The same ordered field list renders as text
 * ("key value" lines) or as a JSON object, so the two outputs agree field
 * by field.
 */
struct Report {
    ordered_json j = ordered_json::object();

    void put(const std::string& k, const ordered_json& v) { j[k] = v; }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [k, v] : j.items()) {
            if (v.is_string())
                out << k << ' ' << v.get<std::string>() << '\n';
            else
                out << k << ' ' << v.dump() << '\n';
        }
        return out.str();
    }
};

struct Output {
    bool quiet = false;
    bool json = false;
    bool payload_on_stdout = false;  // report moves to stderr

    void finish(const Report& r) const {
        if (quiet) return;
        std::ostream& os = payload_on_stdout ? std::cerr : std::cout;
        if (json)
            os << r.j.dump(2) << '\n';
        else
            os << r.text();
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<int> parse_ids(const std::string& s, const char* what) {
    std::vector<int> ids;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            ids.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": bad vertex id '" + tok + "'");
        }
    }
    if (ids.empty()) throw UsageError(std::string(what) + ": empty id list");
    return ids;
}

std::pair<int, int> parse_profile(const std::string& s) {
    std::vector<int> v = parse_ids(s, "--profile");
    if (v.size() != 2 || v[0] < 0 || v[1] < 0)
        throw UsageError("--profile wants 'd,h' with d,h >= 0");
    return {v[0], v[1]};
}

// start the cyclic walk at its smallest vertex, direction preserved
std::vector<int> rotate_to_smallest(std::vector<int> w) {
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
    return w;
}

/*
 * Rooted-mode resolution: an explicit `outer:` line wins (and must validate),
 * otherwise a full triangulation gets its canonical outer face. Anything
 * else has no usable boundary and returns nullopt, which sends decompose
 * into the triangulate-then-restrict pipeline.
 */
std::optional<NearTriangulation> resolve_near(const RotFile& rf) {
    if (rf.outer) {
        NearTriangulation t;
        t.g = rf.g;
        t.outer = *rf.outer;
        t.validate();
        return t;
    }
    if (is_triangulation(rf.g)) {
        NearTriangulation t;
        t.g = rf.g;
        t.outer = canonical_outer_triangle(rf.g);
        return t;
    }
    return std::nullopt;
}

void require_on_boundary(const NearTriangulation& t, const std::vector<int>& ids) {
    for (int v : ids) {
        bool on = std::find(t.outer.begin(), t.outer.end(), v) != t.outer.end();
        if (!on)
            throw UsageError("--root: vertex " + std::to_string(v) +
                             " is not on the outer face");
    }
}

bool boundary_adjacent(const std::vector<int>& walk, int a, int b) {
    int k = (int)walk.size();
    for (int i = 0; i < k; ++i) {
        int u = walk[i], v = walk[(i + 1) % k];
        if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
}

void write_payload(const std::string& path, const std::string& bytes,
                   Output& out, Report& rep) {
    if (path.empty()) {
        out.payload_on_stdout = true;
        std::cout << bytes;
        rep.put("output", "-");
    } else {
        write_file(path, bytes);
        rep.put("output", path);
    }
}

// drop every arc/H edge that is not an edge of g (used after the
// triangulate pipeline so the result splits exactly E(g))
DecompPair restrict_to(const PlaneGraph& g, DecompPair p) {
    std::erase_if(p.arcs, [&](auto e) { return !g.has_edge(e.first, e.second); });
    std::erase_if(p.hedges, [&](auto e) { return !g.has_edge(e.first, e.second); });
    p.canonicalize();
    return p;
}

int verdict_exit(const ConditionReport& rep, Report& r, Output& out) {
    r.put("verdict", rep.ok() ? "ok" : "fail");
    if (!rep.ok()) r.put("violation", rep.first_violation());
    out.finish(r);
    return rep.ok() ? 0 : 1;
}

int run_decompose(const std::string& profile, const std::string& rootstr,
                  const std::string& input, const std::string& output,
                  Output& out) {
    auto [d, h] = parse_profile(profile);
    bool p26 = d == 2 && h == 6, p32 = d == 3 && h == 2, p41 = d == 4 && h == 1;
    if (!p26 && !p32 && !p41)
        throw UsageError("decompose supports profiles 2,6 / 3,2 / 4,1");

    RotFile rf = parse_rot_file(input);
    Report rep;
    rep.put("command", "decompose");
    rep.put("profile", std::to_string(d) + "," + std::to_string(h));
    rep.put("input", input);
    rep.put("n", rf.g.n);

    auto t0 = std::chrono::steady_clock::now();

    if (p41) {
        if (!rootstr.empty())
            throw UsageError("--root does not apply to profile 4,1");
        Decomp41Result r = decompose41(rf.g);
        rep.put("arcs", r.pair.arcs.size());
        rep.put("hedges", r.pair.hedges.size());
        rep.put("ms", (long long)ms_since(t0));
        ConditionReport chk = check_dh(rf.g, r.pair, 4, 1);
        if (chk.ok()) write_payload(output, emit_dh(4, 1, r.pair), out, rep);
        return verdict_exit(chk, rep, out);
    }

    std::optional<NearTriangulation> nt = resolve_near(rf);
    if (!nt) {
        // no usable boundary: complete to a near triangulation, decompose,
        // restrict back to the input's edges, verify with the plain checker
        if (!rootstr.empty())
            throw UsageError("--root needs an input with a usable outer face");
        TriangulateResult tr = triangulate(rf.g);
        const std::vector<int>& w = tr.tri.outer;
        int x = w[0], y = w[1];
        DecompPair pair =
            p26 ? decompose26(tr.tri, x, y, w[2])
                : decompose32(tr.tri, x, y, choose_z(tr.tri, x, y));
        pair = restrict_to(rf.g, pair);
        rep.put("mode", "triangulated");
        rep.put("arcs", pair.arcs.size());
        rep.put("hedges", pair.hedges.size());
        rep.put("ms", (long long)ms_since(t0));
        ConditionReport chk = check_dh(rf.g, pair, d, h);
        if (chk.ok()) write_payload(output, emit_dh(d, h, pair), out, rep);
        return verdict_exit(chk, rep, out);
    }

    std::vector<int> walk = rotate_to_smallest(nt->outer);
    std::vector<int> root =
        rootstr.empty() ? std::vector<int>{walk[0], walk[1]} : parse_ids(rootstr, "--root");
    bool echo_root = rootstr.empty();
    require_on_boundary(*nt, root);
    if (root.size() < 2 || root[0] == root[1] ||
        !boundary_adjacent(nt->outer, root[0], root[1]))
        throw UsageError("--root: first two vertices must be a boundary edge");
    int x = root[0], y = root[1];

    DecompPair pair;
    ConditionReport chk;
    if (p26) {
        if (root.size() == 2 && rootstr.empty()) {
            root.push_back(walk[2]);
            echo_root = true;
        }
        if (root.size() != 3) throw UsageError("profile 2,6 wants --root x,y,z");
        int z = root[2];
        if (z == x || z == y) throw UsageError("--root: z must differ from x,y");
        pair = decompose26(*nt, x, y, z);
        chk = check_26(*nt, x, y, z, pair);
    } else {
        if (root.size() > 4) throw UsageError("profile 3,2 wants --root x,y[,z[,z']]");
        int z;
        if (root.size() >= 3) {
            z = root[2];
        } else {
            z = choose_z(*nt, x, y);
            root.push_back(z);
            echo_root = true;
        }
        std::optional<int> zp;
        if (root.size() >= 4) {
            zp = root[3];
        } else if (!boundary_adjacent(nt->outer, x, z) &&
                   !boundary_adjacent(nt->outer, y, z)) {
            // secondary designee required: take z's smallest boundary neighbor
            int k = (int)nt->outer.size();
            for (int i = 0; i < k; ++i)
                if (nt->outer[i] == z) {
                    int a = nt->outer[(i + 1) % k], b = nt->outer[(i + k - 1) % k];
                    zp = std::min(a, b);
                }
            root.push_back(*zp);
            echo_root = true;
        }
        pair = decompose32(*nt, x, y, z, zp);
        chk = check_32(*nt, x, y, z, zp, pair);
    }

    rep.put("root", root);
    rep.put("arcs", pair.arcs.size());
    rep.put("hedges", pair.hedges.size());
    rep.put("ms", (long long)ms_since(t0));
    if (chk.ok()) {
        std::vector<std::string> comments;
        if (echo_root) {
            std::string c = "root";
            for (int v : root) c += ' ' + std::to_string(v);
            comments.push_back(c);
        }
        write_payload(output, emit_dh(d, h, pair, comments), out, rep);
    }
    return verdict_exit(chk, rep, out);
}

int run_verify(const std::string& profile, const std::string& rootstr,
               const std::string& gpath, const std::string& ppath, Output& out) {
    RotFile rf = parse_rot_file(gpath);
    DhFile dh = parse_dh_file(ppath);
    int d = dh.d, h = dh.h;
    if (!profile.empty()) {
        auto [pd, ph] = parse_profile(profile);
        if (pd != d || ph != h)
            throw UsageError("--profile " + std::to_string(pd) + "," +
                             std::to_string(ph) + " does not match the file header " +
                             std::to_string(d) + " " + std::to_string(h));
    }

    Report rep;
    rep.put("command", "verify");
    rep.put("profile", std::to_string(d) + "," + std::to_string(h));
    rep.put("n", rf.g.n);
    rep.put("arcs", dh.pair.arcs.size());
    rep.put("hedges", dh.pair.hedges.size());

    if (rootstr.empty()) return verdict_exit(check_dh(rf.g, dh.pair, d, h), rep, out);

    std::vector<int> root = parse_ids(rootstr, "--root");
    std::optional<NearTriangulation> nt = resolve_near(rf);
    if (!nt) throw UsageError("--root needs an input with a usable outer face");
    require_on_boundary(*nt, root);
    rep.put("root", root);
    if (d == 2 && h == 6) {
        if (root.size() != 3) throw UsageError("profile 2,6 wants --root x,y,z");
        return verdict_exit(check_26(*nt, root[0], root[1], root[2], dh.pair), rep, out);
    }
    if (d == 3 && h == 2) {
        if (root.size() != 3 && root.size() != 4)
            throw UsageError("profile 3,2 wants --root x,y,z[,z']");
        std::optional<int> zp;
        if (root.size() == 4) zp = root[3];
        return verdict_exit(check_32(*nt, root[0], root[1], root[2], zp, dh.pair), rep,
                            out);
    }
    throw UsageError("--root applies to profiles 2,6 and 3,2 only");
}

int run_oracle(int d, int h, const std::string& input, bool exhaustive,
               long long budget, int workers, const std::string& witness_path,
               Output& out) {
    RotFile rf = parse_rot_file(input);
    OracleOptions opt;
    opt.exhaustive = exhaustive;
    if (budget > 0) opt.node_budget = budget;
    opt.workers = workers;

    Report rep;
    rep.put("command", "oracle");
    rep.put("d", d);
    rep.put("h", h);
    rep.put("input", input);
    rep.put("n", rf.g.n);

    auto t0 = std::chrono::steady_clock::now();
    OracleResult res = exact_decide(rf.g, d, h, opt);
    rep.put("feasible", res.feasible);
    rep.put("nodes", res.nodes);
    rep.put("ms", (long long)ms_since(t0));

    std::string wit = "-";
    if (res.feasible) {
        ConditionReport chk = check_dh(rf.g, res.witness, d, h);
        PDEC_CHECK(chk.ok(), "oracle witness failed re-verification");
        if (!witness_path.empty()) {
            write_file(witness_path, emit_dh(d, h, res.witness));
            wit = witness_path;
        }
    }
    rep.put("witness", wit);
    out.finish(rep);
    return res.feasible ? 0 : 1;
}

int run_gen(const std::string& family, int n, std::uint64_t seed,
            const std::string& output, Output& out) {
    std::string bytes;
    int edges = 0, vertices = 0;
    if (family == "stacked") {
        if (n < 3) throw UsageError("--family stacked wants --n >= 3");
        NearTriangulation t = stacked_triangulation(n, seed);
        vertices = t.g.n;
        edges = t.g.edge_count();
        bytes = emit_rot(t);
    } else if (family == "solid") {
        std::string name = n == 4    ? "tetrahedron"
                           : n == 6  ? "octahedron"
                           : n == 12 ? "icosahedron"
                                     : "";
        if (name.empty())
            throw UsageError("--family solid wants --n 4 (tetrahedron), "
                             "6 (octahedron) or 12 (icosahedron)");
        NearTriangulation t = named_solid(name);
        vertices = t.g.n;
        edges = t.g.edge_count();
        bytes = emit_rot(t);
    } else if (family == "double-wheel") {
        if (n < 5) throw UsageError("--family double-wheel wants --n >= 5 (rim n-2)");
        NearTriangulation t = double_wheel(n - 2);
        vertices = t.g.n;
        edges = t.g.edge_count();
        bytes = emit_rot(t);
    } else if (family == "stellate") {
        if (n < 3) throw UsageError("--family stellate wants --n >= 3");
        StellateResult s = stellate(stacked_triangulation(n, seed).g);
        vertices = s.g.n;
        edges = s.g.edge_count();
        std::vector<int> outer = canonical_outer_triangle(s.g);
        bytes = emit_rot(s.g, &outer);
    } else {
        throw UsageError("--family must be stacked, solid, double-wheel or stellate");
    }

    Report rep;
    rep.put("command", "gen");
    rep.put("family", family);
    rep.put("n", n);
    rep.put("seed", seed);
    rep.put("vertices", vertices);
    rep.put("edges", edges);
    write_payload(output, bytes, out, rep);
    out.finish(rep);
    return 0;
}

int run_audit(const std::string& input, Output& out) {
    RotFile rf = parse_rot_file(input);
    ChargeTable ct = discharge_audit(rf.g);
    ReducibleConfig cfg = find_reducible(rf.g);

    // readable table first, then the result record
    if (!out.quiet && !out.json) {
        for (int v = 1; v <= ct.n; ++v)
            std::cout << "charge " << v << " deg " << ct.initial[v] + 6 << " init "
                      << ct.initial[v] << " d5 " << ct.d5[v] << " final "
                      << ct.final_num[v] << '/' << ct.final_den[v] << '\n';
    }

    Report rep;
    rep.put("command", "audit");
    rep.put("input", input);
    rep.put("n", ct.n);
    rep.put("total", ct.total);
    rep.put("all_final_nonneg", ct.all_final_nonneg);
    rep.put("config", config_kind_name(cfg.kind));
    rep.put("config_vertices", cfg.vertices);
    if (out.json) {
        ordered_json rows = ordered_json::array();
        for (int v = 1; v <= ct.n; ++v)
            rows.push_back({{"v", v},
                            {"deg", ct.initial[v] + 6},
                            {"init", ct.initial[v]},
                            {"d5", ct.d5[v]},
                            {"final", std::to_string(ct.final_num[v]) + "/" +
                                          std::to_string(ct.final_den[v])}});
        rep.put("charge", rows);
    }
    out.finish(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar edge decompositions into a bounded-out-degree acyclic "
                 "part plus a bounded-degree part"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "generator seed (gen)");
    app.add_flag("--quiet", out.quiet, "suppress the result record");
    app.add_flag("--json", out.json, "result record as JSON");

    std::string profile, rootstr, input, output, gpath, ppath, family = "stacked";
    int od = 0, oh = 0, gn = 0, workers = 1;
    long long budget = 0;
    bool exhaustive = false;

    CLI::App* dec = app.add_subcommand("decompose", "split a .rot into a .dh");
    dec->add_option("--profile", profile, "d,h profile: 2,6 / 3,2 / 4,1")->required();
    dec->add_option("--root", rootstr, "root vertices on the outer face");
    dec->add_option("input", input, "input .rot file")->required();
    dec->add_option("-o,--output", output, ".dh destination (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "check a .dh against its .rot");
    ver->add_option("--profile", profile, "d,h (must match the .dh header)");
    ver->add_option("--root", rootstr, "root for the boundary condition checkers");
    ver->add_option("graph", gpath, "input .rot file")->required();
    ver->add_option("pair", ppath, "input .dh file")->required();

    CLI::App* orc = app.add_subcommand("oracle", "exact feasibility for small n");
    orc->set_help_flag("--help", "print help");  // frees -h/--h for the bound below
    orc->add_option("--d", od, "out-degree bound")->required();
    orc->add_option("--h", oh, "H degree bound")->required();
    orc->add_option("input", input, "input .rot file")->required();
    orc->add_flag("--exhaustive", exhaustive, "disable pruning, enumerate all");
    orc->add_option("--budget", budget, "search node budget");
    orc->add_option("--workers", workers, "parallel workers (default 1)");
    orc->add_option("-o,--witness", output, "write the witness .dh here");

    CLI::App* gen = app.add_subcommand("gen", "emit a deterministic instance");
    gen->add_option("--family", family, "stacked | solid | double-wheel | stellate");
    gen->add_option("--n", gn, "size parameter")->required();
    gen->add_option("-o,--output", output, ".rot destination (default stdout)");

    CLI::App* aud = app.add_subcommand("audit", "charge table + first reducible "
                                                "pattern of a triangulation");
    aud->add_option("input", input, "input .rot file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*dec) return run_decompose(profile, rootstr, input, output, out);
        if (*ver) return run_verify(profile, rootstr, gpath, ppath, out);
        if (*orc)
            return run_oracle(od, oh, input, exhaustive, budget, workers, output, out);
        if (*gen) return run_gen(family, gn, seed, output, out);
        if (*aud) return run_audit(input, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
