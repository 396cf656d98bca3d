// Drives the pdec binary through real files: exit codes, byte-exact
// outputs, the json mirror, and the gen -> decompose -> verify round trip.
#include "doctest.h"

#include "io/format.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using namespace pdec;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "pdec_cli_tests";

struct RunResult {
    int rc = -1;
    std::string out;  // stdout + stderr merged unless noted
};

RunResult run(const std::string& args, bool drop_stderr = false) {
    std::string cmd = std::string(PDEC_BIN) + " " + args +
                      (drop_stderr ? " 2>/dev/null" : " 2>&1");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string path(const std::string& name) {
    fs::create_directories(kDir);
    return (kDir / name).string();
}

} // namespace

TEST_CASE("gen, decompose 4,1 and verify round trip") {
    std::string rot = path("icosa.rot"), dh = path("icosa.dh");
    CHECK(run("gen --family solid --n 12 -o " + rot).rc == 0);
    RunResult d = run("decompose --profile 4,1 " + rot + " -o " + dh);
    CHECK(d.rc == 0);
    CHECK(d.out.find("verdict ok") != std::string::npos);
    CHECK(run("verify " + rot + " " + dh).rc == 0);
    CHECK(run("verify --profile 4,1 " + rot + " " + dh).rc == 0);
}

TEST_CASE("rooted 2,6 on K3 emits the exact base split") {
    std::string rot = path("k3.rot"), dh = path("k3.dh");
    write_file(rot, "3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 1 2 3\n");
    CHECK(run("decompose --profile 2,6 --root 1,2,3 " + rot + " -o " + dh).rc == 0);
    CHECK(read_file(dh) == "2 6\nD 1 2\nD 3 2\nH 1 3\n");
    CHECK(run("verify --profile 2,6 --root 1,2,3 " + rot + " " + dh).rc == 0);
}

TEST_CASE("omitted roots are chosen and echoed as a comment") {
    std::string rot = path("s40.rot"), dh = path("s40.dh");
    CHECK(run("gen --family stacked --n 40 --seed 5 -o " + rot).rc == 0);
    CHECK(run("decompose --profile 3,2 " + rot + " -o " + dh).rc == 0);
    std::string bytes = read_file(dh);
    auto at = bytes.find("# root ");
    REQUIRE(at != std::string::npos);
    // feed the echoed root back through the boundary-condition checker
    std::string ids = bytes.substr(at + 7, bytes.find('\n', at) - at - 7);
    for (auto& c : ids)
        if (c == ' ') c = ',';
    CHECK(run("verify --profile 3,2 --root " + ids + " " + rot + " " + dh).rc == 0);

    std::string dh26 = path("s40_26.dh");
    CHECK(run("decompose --profile 2,6 " + rot + " -o " + dh26).rc == 0);
    CHECK(read_file(dh26).find("# root ") != std::string::npos);
}

TEST_CASE("verification failure exits 1") {
    std::string rot = path("oct.rot"), dh = path("oct.dh"), bad = path("oct_bad.dh");
    CHECK(run("gen --family solid --n 6 -o " + rot).rc == 0);
    CHECK(run("decompose --profile 4,1 " + rot + " -o " + dh).rc == 0);
    // drop one arc so the pair no longer covers every edge
    DhFile f = parse_dh_file(dh);
    REQUIRE(!f.pair.arcs.empty());
    f.pair.arcs.pop_back();
    write_file(bad, emit_dh(f.d, f.h, f.pair));
    RunResult r = run("verify " + rot + " " + bad);
    CHECK(r.rc == 1);
    CHECK(r.out.find("verdict fail") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    std::string rot = path("icosa.rot");
    CHECK(run("decompose --profile 5,5 " + rot).rc == 2);
    CHECK(run("decompose --profile 4,1 --root 1,2 " + rot).rc == 2);
    CHECK(run("decompose --profile 2,6 --root 1,7,3 " + rot + " -o /dev/null").rc == 2);
    CHECK(run("decompose --nosuchflag " + rot).rc == 2);
    CHECK(run("gen --family nosuch --n 5").rc == 2);
    CHECK(run("gen --family solid --n 7").rc == 2);
    CHECK(run("").rc == 2);
    CHECK(run("--help").rc == 0);

    std::string asym = path("asym.rot");
    write_file(asym, "2\n1: 2\n2:\n");
    RunResult r = run("audit " + asym);
    CHECK(r.rc == 2);
    CHECK(r.out.find("line 3") != std::string::npos);

    std::string dh = path("icosa.dh");
    CHECK(run("verify --profile 2,6 " + rot + " " + dh).rc == 2);  // header is 4 1
}

TEST_CASE("oracle exit codes: feasible, infeasible, budget") {
    std::string c5 = path("c5.rot");
    write_file(c5, "5\n1: 2 5\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4 1\n");
    CHECK(run("oracle --d 1 --h 0 " + c5).rc == 1);
    CHECK(run("oracle --d 1 --h 2 " + c5).rc == 0);

    std::string rot = path("icosa.rot"), wit = path("icosa_wit.dh");
    RunResult r = run("oracle --d 2 --h 6 " + rot + " -o " + wit);
    CHECK(r.rc == 0);
    CHECK(r.out.find("feasible true") != std::string::npos);
    CHECK(run("verify " + rot + " " + wit).rc == 0);

    std::string s10 = path("s10.rot");
    CHECK(run("gen --family stacked --n 10 --seed 1 -o " + s10).rc == 0);
    RunResult b = run("oracle --d 2 --h 6 --exhaustive --budget 50000 " + s10);
    CHECK(b.rc == 3);
}

TEST_CASE("gen is byte-deterministic per seed") {
    std::string a = path("g1.rot"), b = path("g2.rot"), c = path("g3.rot");
    CHECK(run("gen --family stacked --n 30 --seed 9 -o " + a).rc == 0);
    CHECK(run("gen --family stacked --n 30 --seed 9 -o " + b).rc == 0);
    CHECK(run("gen --family stacked --n 30 --seed 10 -o " + c).rc == 0);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(a) != read_file(c));

    // stellate and double-wheel are near triangulations / triangulations
    // that the decomposers accept directly
    std::string st = path("st.rot"), dw = path("dw.rot");
    CHECK(run("gen --family stellate --n 6 --seed 2 -o " + st).rc == 0);
    CHECK(run("gen --family double-wheel --n 10 -o " + dw).rc == 0);
    CHECK(run("decompose --profile 4,1 " + st + " -o /dev/null").rc == 0);
    CHECK(run("decompose --profile 2,6 " + dw + " -o /dev/null").rc == 0);
}

TEST_CASE("json report mirrors the text report") {
    std::string rot = path("icosa.rot");
    RunResult text = run("decompose --profile 4,1 " + rot + " -o /dev/null");
    RunResult js = run("--json decompose --profile 4,1 " + rot + " -o /dev/null");
    CHECK(text.rc == 0);
    CHECK(js.rc == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["verdict"] == "ok");
    CHECK(j["n"] == 12);
    CHECK(j["profile"] == "4,1");
    // the text lines carry the same fields verbatim
    CHECK(text.out.find("verdict ok\n") != std::string::npos);
    CHECK(text.out.find("n 12\n") != std::string::npos);
    CHECK(text.out.find("profile 4,1\n") != std::string::npos);
    CHECK(text.out.find("arcs " + j["arcs"].dump() + "\n") != std::string::npos);
    CHECK(text.out.find("hedges " + j["hedges"].dump() + "\n") != std::string::npos);
}

TEST_CASE("audit prints the charge table and the first pattern") {
    std::string rot = path("icosa.rot");
    RunResult r = run("audit " + rot);
    CHECK(r.rc == 0);
    CHECK(r.out.find("total -12") != std::string::npos);
    CHECK(r.out.find("config five-pair") != std::string::npos);
    CHECK(r.out.find("charge 12 deg 5 init -1 d5 5 final -1/1") != std::string::npos);

    RunResult js = run("--json audit " + rot, true);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["total"] == -12);
    CHECK(j["charge"].size() == 12);

    std::string c4 = path("c4.rot");
    write_file(c4, "4\n1: 2 4\n2: 1 3\n3: 2 4\n4: 3 1\n");
    CHECK(run("audit " + c4).rc == 2);
}

TEST_CASE("payload goes to stdout when no output file is given") {
    std::string rot = path("icosa.rot");
    RunResult r = run("decompose --profile 4,1 " + rot, true);
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("4 1\n", 0) == 0);  // stdout is exactly the .dh payload
    CHECK(r.out.find("verdict") == std::string::npos);

    RunResult g = run("gen --family solid --n 4", true);
    CHECK(g.rc == 0);
    CHECK(g.out.rfind("4\n", 0) == 0);

    RunResult q = run("--quiet decompose --profile 4,1 " + rot + " -o /dev/null");
    CHECK(q.rc == 0);
    CHECK(q.out.empty());
}

TEST_CASE("decompose handles boundary-free planar input via completion") {
    // a path has no usable outer face line and is not a triangulation
    std::string p = path("path.rot"), out = path("path.dh");
    write_file(p, "4\n1: 2\n2: 1 3\n3: 2 4\n4: 3\n");
    for (const char* prof : {"2,6", "3,2", "4,1"}) {
        RunResult r = run(std::string("decompose --profile ") + prof + " " + p +
                          " -o " + out);
        CHECK(r.rc == 0);
        CHECK(run("verify " + p + " " + out).rc == 0);
    }
    CHECK(run("decompose --profile 2,6 --root 1,2,3 " + p).rc == 2);
}
