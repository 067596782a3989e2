#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "planar7/graph.hpp"

namespace planar7 {

class Embedding;

// Edge-list format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Blank lines and '#' comments are ignored. Parse errors carry line numbers.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// Rotation-system format: first line "n", then one line per vertex
// "v: w1 w2 ... wd" listing neighbors in counterclockwise order.
Embedding parse_rotation_system(std::istream& in);
std::string write_rotation_system(const Embedding& emb);

std::string graph_to_dot(const Graph& g);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace planar7
