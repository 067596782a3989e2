#include "planar7/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace planar7 {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::invalid_argument("edge endpoint out of range");
    if (has_edge(u, v)) throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (int v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    int c = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

int component_count(const Graph& g) {
    auto comp = component_ids(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

namespace {

// Shared lowpoint DFS: reports articulation points and block edge sets.
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    int timer = 0;

    explicit BlockDfs(const Graph& g_) : g(g_), disc(g_.order(), -1), low(g_.order(), 0), is_cut(g_.order(), 0) {}

    void pop_block(std::pair<int, int> top) {
        std::vector<std::pair<int, int>> es;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            es.push_back(e);
            if (e == top) break;
        }
        block_edges.push_back(std::move(es));
    }

    void run(int root) {
        // Iterative DFS to be safe on long paths.
        struct Frame {
            int v, parent;
            size_t i = 0;
            int children = 0;
        };
        std::vector<Frame> st;
        st.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < g.neighbors(f.v).size()) {
                int w = g.neighbors(f.v)[f.i++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent, children = f.children;
                st.pop_back();
                if (parent != -1) {
                    Frame& pf = st.back();
                    ++pf.children;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        if (pf.parent != -1) is_cut[parent] = 1;
                        pop_block({parent, v});
                    }
                } else if (children > 1) {
                    is_cut[v] = 1;
                }
            }
        }
    }
};

}  // namespace

std::vector<int> articulation_points(const Graph& g) {
    BlockDfs d(g);
    for (int s = 0; s < g.order(); ++s)
        if (d.disc[s] == -1) d.run(s);
    std::vector<int> cuts;
    for (int v = 0; v < g.order(); ++v)
        if (d.is_cut[v]) cuts.push_back(v);
    return cuts;
}

std::vector<BiconnectedBlock> biconnected_blocks(const Graph& g) {
    BlockDfs d(g);
    for (int s = 0; s < g.order(); ++s)
        if (d.disc[s] == -1) d.run(s);
    std::vector<BiconnectedBlock> blocks;
    for (auto& es : d.block_edges) {
        BiconnectedBlock b;
        for (auto [u, v] : es) {
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        for (auto [u, v] : es) b.edges.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(b.edges.begin(), b.edges.end());
        b.graph = Graph(static_cast<int>(b.vertices.size()));
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
        };
        for (auto [u, v] : b.edges) b.graph.add_edge(local(u), local(v));
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const BiconnectedBlock& a, const BiconnectedBlock& b) { return a.edges < b.edges; });
    return blocks;
}

PreconditionReport validate_preconditions(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    PreconditionReport r;
    r.min_degree = g.min_degree();
    r.min_adjacent_degree_sum = 0;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        int s = g.degree(u) + g.degree(v);
        if (first || s < r.min_adjacent_degree_sum) r.min_adjacent_degree_sum = s;
        first = false;
    }
    r.is_two_connected = g.order() >= 3 && is_connected(g) && articulation_points(g).empty();
    return r;
}

std::optional<std::vector<int>> find_cycle(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycle length must be >= 3");
    if (g.order() < k) return std::nullopt;
    std::vector<char> used(g.order(), 0);
    std::vector<int> path;
    // Path of distinct vertices, all > start except the start itself.
    std::function<bool(int, int)> dfs = [&](int start, int v) -> bool {
        if (static_cast<int>(path.size()) == k)
            return g.has_edge(v, start);
        for (int w : g.neighbors(v)) {
            if (w <= start || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(start, w)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (int s = 0; s + k <= g.order(); ++s) {
        used.assign(g.order(), 0);
        used[s] = 1;
        path.clear();
        path.push_back(s);
        if (dfs(s, s)) return path;
    }
    return std::nullopt;
}

bool contains_clique4(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        // Common neighborhood of an edge; any adjacent pair inside closes K4.
        std::vector<int> common;
        std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                              g.neighbors(v).end(), std::back_inserter(common));
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
                if (g.has_edge(common[i], common[j])) return true;
    }
    return false;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace planar7
