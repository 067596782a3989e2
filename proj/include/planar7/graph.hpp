#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planar7 {

// Simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int min_degree() const;
    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

struct PreconditionReport {
    int min_degree = 0;
    int min_adjacent_degree_sum = 0;  // min over edges of deg(u)+deg(v)
    bool is_two_connected = false;
};

// Measures delta(G), the minimum adjacent degree sum, and 2-connectivity
// (connected, order >= 3, no cut vertex). Throws on the empty graph.
PreconditionReport validate_preconditions(const Graph& g);

bool is_connected(const Graph& g);
std::vector<int> component_ids(const Graph& g);  // per-vertex component index
int component_count(const Graph& g);
std::vector<int> articulation_points(const Graph& g);

// A block of the block-cut tree: a maximal 2-connected subgraph or a bridge.
struct BiconnectedBlock {
    std::vector<int> vertices;               // original ids, sorted
    std::vector<std::pair<int, int>> edges;  // original ids, u < v
    Graph graph;                             // relabeled 0..|vertices|-1
};

std::vector<BiconnectedBlock> biconnected_blocks(const Graph& g);

// Cycle with exactly k distinct vertices, if one exists. DFS from each start
// vertex with depth cap; only vertices above the start are explored, so the
// witness is the lexicographically least cycle rooted at its minimum vertex.
std::optional<std::vector<int>> find_cycle(const Graph& g, int k);

bool contains_clique4(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace planar7
