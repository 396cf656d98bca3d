#include "io/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pdec {

void DecompPair::canonicalize() {
    for (auto& e : hedges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(arcs.begin(), arcs.end());
    std::sort(hedges.begin(), hedges.end());
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ": " << what;
    throw ParseError(os.str());
}

// one logical line with its comment stripped; skips blank lines
struct LineReader {
    std::istream& in;
    int lineno = 0;

    bool next(std::string& out, int& at) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            size_t h = raw.find('#');
            if (h != std::string::npos) raw.erase(h);
            size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = raw.find_last_not_of(" \t\r");
            out = raw.substr(a, b - a + 1);
            at = lineno;
            return true;
        }
        return false;
    }
};

long long parse_int(const std::string& tok, int line) {
    if (tok.empty()) fail(line, "empty integer token");
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        fail(line, "not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) fail(line, "not an integer: '" + tok + "'");
    return v;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

RotFile parse_rot(std::istream& in) {
    LineReader rd{in};
    std::string line;
    int at = 0;

    if (!rd.next(line, at)) throw ParseError("empty input, expected vertex count");
    {
        auto tk = tokens(line);
        if (tk.size() != 1) fail(at, "expected a single vertex count");
        long long n = parse_int(tk[0], at);
        if (n < 1 || n > 20'000'000) fail(at, "vertex count out of range");
        RotFile rf;
        rf.g = PlaneGraph((int)n);

        std::vector<char> seen(n + 1, 0);
        std::vector<int> vline(n + 1, 0);
        for (long long i = 0; i < n; ++i) {
            if (!rd.next(line, at)) fail(rd.lineno + 1, "missing rotation line");
            auto tks = tokens(line);
            if (tks.empty() || tks[0].back() != ':')
                fail(at, "expected 'v:' rotation line");
            long long v = parse_int(tks[0].substr(0, tks[0].size() - 1), at);
            if (v < 1 || v > n) fail(at, "vertex id out of range");
            if (seen[v]) fail(at, "duplicate rotation line for vertex " + std::to_string(v));
            seen[v] = 1;
            vline[v] = at;
            for (size_t k = 1; k < tks.size(); ++k) {
                long long u = parse_int(tks[k], at);
                if (u < 1 || u > n) fail(at, "neighbor id out of range");
                rf.g.rot[v].push_back((int)u);
            }
        }

        // symmetry errors blame the line of the vertex missing the entry
        for (int v = 1; v <= n; ++v)
            for (int u : rf.g.rot[v]) {
                const auto& back = rf.g.rot[u];
                if (std::find(back.begin(), back.end(), v) == back.end())
                    fail(vline[u], "asymmetric rotation: vertex " + std::to_string(u) +
                                       " does not list " + std::to_string(v));
            }

        if (rd.next(line, at)) {
            auto tks = tokens(line);
            if (tks.empty() || tks[0] != "outer:")
                fail(at, "unexpected trailing line (only 'outer:' is allowed)");
            std::vector<int> w;
            for (size_t k = 1; k < tks.size(); ++k) {
                long long u = parse_int(tks[k], at);
                if (u < 1 || u > n) fail(at, "outer vertex out of range");
                w.push_back((int)u);
            }
            if (w.size() < 3) fail(at, "outer walk shorter than 3");
            rf.outer = std::move(w);
            std::string extra;
            int eat = 0;
            if (rd.next(extra, eat)) fail(eat, "unexpected content after outer line");
        }

        rf.g.validate();
        if (rf.outer) {
            const auto& w = *rf.outer;
            for (size_t i = 0; i < w.size(); ++i)
                if (!rf.g.has_edge(w[i], w[(i + 1) % w.size()]))
                    throw ParseError("outer walk uses a missing edge");
            Face tr = trace_face_from(rf.g, w[0], w[1]);
            bool same = tr.walk.size() == w.size();
            if (same)
                for (size_t i = 0; i < w.size(); ++i)
                    if (tr.walk[i] != w[i]) { same = false; break; }
            if (!same) throw ParseError("outer walk does not match a face orbit");
        }
        return rf;
    }
}

RotFile parse_rot_string(const std::string& s) {
    std::istringstream is(s);
    return parse_rot(is);
}

RotFile parse_rot_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_rot(f);
}

std::string emit_rot(const PlaneGraph& g, const std::vector<int>* outer) {
    std::ostringstream os;
    os << g.n << "\n";
    for (int v = 1; v <= g.n; ++v) {
        os << v << ":";
        for (int u : g.rot[v]) os << " " << u;
        os << "\n";
    }
    if (outer && !outer->empty()) {
        std::vector<int> w = *outer;
        int k = (int)(std::min_element(w.begin(), w.end()) - w.begin());
        std::rotate(w.begin(), w.begin() + k, w.end());
        os << "outer:";
        for (int v : w) os << " " << v;
        os << "\n";
    }
    return os.str();
}

std::string emit_rot(const NearTriangulation& t) { return emit_rot(t.g, &t.outer); }

DhFile parse_dh(std::istream& in) {
    LineReader rd{in};
    std::string line;
    int at = 0;
    if (!rd.next(line, at)) throw ParseError("empty input, expected 'd h' header");
    auto hd = tokens(line);
    if (hd.size() != 2) fail(at, "expected 'd h' header");
    DhFile df;
    long long d = parse_int(hd[0], at), h = parse_int(hd[1], at);
    if (d < 0 || d > 1'000'000 || h < 0 || h > 1'000'000) fail(at, "d or h out of range");
    df.d = (int)d;
    df.h = (int)h;
    while (rd.next(line, at)) {
        auto tks = tokens(line);
        if (tks.size() != 3 || (tks[0] != "D" && tks[0] != "H"))
            fail(at, "expected 'D u v' or 'H u v'");
        long long u = parse_int(tks[1], at), v = parse_int(tks[2], at);
        if (u < 1 || v < 1 || u == v) fail(at, "bad edge endpoints");
        if (tks[0] == "D")
            df.pair.arcs.emplace_back((int)u, (int)v);
        else {
            if (u > v) fail(at, "H line must list the smaller endpoint first");
            df.pair.hedges.emplace_back((int)u, (int)v);
        }
    }
    df.pair.canonicalize();
    return df;
}

DhFile parse_dh_string(const std::string& s) {
    std::istringstream is(s);
    return parse_dh(is);
}

DhFile parse_dh_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_dh(f);
}

std::string emit_dh(int d, int h, const DecompPair& pair,
                    const std::vector<std::string>& comments) {
    DecompPair p = pair;
    p.canonicalize();
    std::ostringstream os;
    os << d << " " << h << "\n";
    for (const auto& c : comments) os << "# " << c << "\n";
    for (auto& a : p.arcs) os << "D " << a.first << " " << a.second << "\n";
    for (auto& e : p.hedges) os << "H " << e.first << " " << e.second << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace pdec
