#pragma once
#include "core/surgery.hpp"

#include <utility>
#include <vector>

namespace pdec {

inline int live_count(const PlaneGraph& g) {
    int c = 0;
    for (int v = 1; v <= g.n; ++v)
        if (g.degree(v) > 0) c++;
    return c;
}

// boundary walk plus O(1) position lookups
struct Cycle {
    std::vector<int> walk;
    std::vector<int> pos;

    explicit Cycle(const NearTriangulation& t)
        : walk(boundary_cycle(t)), pos(t.g.n + 1, -1) {
        for (int i = 0; i < (int)walk.size(); ++i) pos[walk[i]] = i;
    }
    int size() const { return (int)walk.size(); }
    bool on(int v) const { return pos[v] >= 0; }
    std::pair<int, int> neighbors(int v) const {
        int i = pos[v], L = size();
        return {walk[(i + 1) % L], walk[(i + L - 1) % L]};
    }
    bool adjacent(int a, int b) const {
        auto [p, q] = neighbors(a);
        return b == p || b == q;
    }
    // does position p lie on the closed arc from position a to position b
    // (along walk order)?
    bool on_arc(int p, int a, int b) const {
        if (a <= b) return p >= a && p <= b;
        return p >= a || p <= b;
    }
};

} // namespace pdec
