#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "planar7/graph.hpp"

namespace planar7 {

using Dart = std::pair<int, int>;  // directed edge end u -> v

struct Face {
    std::vector<Dart> darts;  // boundary walk; darts[i].second == darts[i+1].first
    int length() const { return static_cast<int>(darts.size()); }
    // Walk vertices in order (first endpoint of each dart).
    std::vector<int> walk() const;
    bool contains_vertex(int v) const;
};

struct FaceHistogram {
    std::map<int, int> counts;  // length -> number of faces
    long long total_length() const;
};

// Combinatorial embedding: a rotation system (counterclockwise neighbor order
// per vertex) together with its traced face set. One face id is designated as
// the outer face. Faces are traced with next(u->v) = (v -> successor of u in
// the rotation at v), each dart lying on exactly one face.
class Embedding {
public:
    static Embedding from_rotations(const Graph& g, std::vector<std::vector<int>> rot,
                                    std::optional<int> outer = std::nullopt);

    // Builds graph + rotations from a full list of face boundary walks (vertex
    // cycles). Orientations may be inconsistent; they are fixed by propagation.
    // Every undirected edge must appear exactly twice across all walks.
    // outer_walk, when given, is the index into `walks` of the outer face.
    static Embedding from_faces(int n, const std::vector<std::vector<int>>& walks,
                                std::optional<int> outer_walk = std::nullopt);

    const Graph& graph() const { return g_; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int face_of_dart(int u, int v) const;
    // The two face ids incident to edge {u,v} (equal for a bridge).
    std::pair<int, int> faces_of_edge(int u, int v) const;

    int outer_face() const { return outer_face_; }
    void set_outer_face(int f) { outer_face_ = f; }

    FaceHistogram face_histogram() const;

private:
    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<Face> faces_;
    std::unordered_map<long long, int> face_of_;
    int outer_face_ = 0;

    void trace_faces();
    long long dart_key(int u, int v) const { return static_cast<long long>(u) * g_.order() + v; }
};

// Re-derives the face list (already cached on the embedding).
const std::vector<Face>& trace_faces(const Embedding& emb);

FaceHistogram face_histogram(const Embedding& emb);

// True iff V - E + F = 2 for every connected component, counting one face for
// an isolated vertex and assigning each face to the component of its darts.
// (For a connected embedding this is the usual genus-0 check.)
bool euler_check(const Embedding& emb);

// Embedding of the full planar dual: one vertex per face, rotation given by
// the boundary walk. Requires a connected host with at least one edge.
Embedding dual_embedding(const Embedding& emb);

// Dual over residual faces / T3 blocks / small block sets (see blocks.hpp for
// the builder). Node ref indexes into the source collection of its kind.
struct DualNode {
    enum class Kind { ResidualFace, T3Block, SmallSet };
    Kind kind;
    int ref;
    int face_length = 0;  // for ResidualFace nodes
};

struct DualGraph {
    std::vector<DualNode> nodes;
    std::vector<std::pair<int, int>> edges;  // node index pairs; multi-edges allowed
    bool reduced = false;
};

// Removes small-set nodes with their incident edges and collapses parallel
// edges, keeping one incidence per distinct node pair.
DualGraph reduce_dual(const DualGraph& d);

std::string dual_to_dot(const DualGraph& d);

}  // namespace planar7
