#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planar7/embedding.hpp"
#include "planar7/graph.hpp"

namespace planar7 {

// Certificate of nonplanarity: an edge-minimal nonplanar subgraph, which by
// Kuratowski's theorem is a subdivision of K5 or K3,3.
struct KuratowskiWitness {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> branch_vertices;  // vertices of degree >= 3 in the witness
    enum class Kind { K5, K33 } kind;
    std::string describe() const;
};

using PlanarityResult = std::variant<Embedding, KuratowskiWitness>;

bool is_planar(const Graph& g);

// Demoucron-Malgrange-Pertuiset per biconnected block, blocks merged at cut
// vertices by rotation concatenation. Deterministic for a fixed input. On
// failure the witness is extracted by greedy edge-minimalization.
PlanarityResult test_planarity(const Graph& g);

}  // namespace planar7
