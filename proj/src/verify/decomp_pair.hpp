#pragma once
#include <utility>
#include <vector>

namespace pdec {

/*
 * Result of a decomposition: D as directed arcs (tail,head), H as undirected
 * edges stored with the smaller endpoint first. canonicalize() sorts both
 * lists; emission and comparison always go through the canonical form.
 */
struct DecompPair {
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> hedges;

    void canonicalize();
    bool operator==(const DecompPair& o) const {
        return arcs == o.arcs && hedges == o.hedges;
    }
};

} // namespace pdec
