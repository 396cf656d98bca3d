#pragma once
#include "core/graph.hpp"
#include "verify/decomp_pair.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pdec {

/*
 * .rot file: '#' starts a comment, tokens are whitespace separated.
 *   line 1:            n
 *   next n lines:      v: u1 u2 ... uk     (clockwise rotation, may be empty)
 *   optional last:     outer: v1 ... vk    (must match a face orbit, with
 *                                           direction)
 * Parse errors carry the 1-based line number.
 */
struct RotFile {
    PlaneGraph g;
    std::optional<std::vector<int>> outer;
};

RotFile parse_rot(std::istream& in);
RotFile parse_rot_string(const std::string& s);
RotFile parse_rot_file(const std::string& path);

// canonical emission: outer walk rotated to start at its smallest vertex,
// single spaces, LF line ends, trailing newline
std::string emit_rot(const PlaneGraph& g, const std::vector<int>* outer = nullptr);
std::string emit_rot(const NearTriangulation& t);

/*
 * .dh file:
 *   header:  d h
 *   lines:   D u v   (arc u->v), sorted
 *            H u v   (u < v), sorted
 * Comments with '#' are legal anywhere; emit_dh can write comment lines
 * directly after the header.
 */
struct DhFile {
    int d = 0, h = 0;
    DecompPair pair;
};

DhFile parse_dh(std::istream& in);
DhFile parse_dh_string(const std::string& s);
DhFile parse_dh_file(const std::string& path);

std::string emit_dh(int d, int h, const DecompPair& pair,
                    const std::vector<std::string>& comments = {});

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace pdec
