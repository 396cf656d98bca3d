#pragma once
#include "core/graph.hpp"

#include <cstdint>
#include <string>

namespace pdec {

/*
 * Deterministic generator family. All randomness flows through SplitMix64 and
 * selections are made by modulo, so a (family, n, seed) triple fixes the
 * output byte for byte.
 */
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// stacking: start from K3 and insert vertex v=4..n into a seeded face pick,
// joining it to the face's three corners
NearTriangulation stacked_triangulation(int n, std::uint64_t seed);

// tetrahedron | octahedron | icosahedron
NearTriangulation named_solid(const std::string& name);

// rim cycle 1..k plus two hubs k+1 (inside pattern) and k+2; k >= 3
NearTriangulation double_wheel(int k);

struct StellateResult {
    PlaneGraph g;
    int orig_n = 0;  // apexes are orig_n+1..g.n, one per face in trace order
};

// insert one apex into every face of a triangulation (outer included)
StellateResult stellate(const PlaneGraph& g);

} // namespace pdec
