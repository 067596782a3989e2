#include "planar7/blocks.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planar7 {

namespace {

using EdgeV = std::pair<int, int>;

EdgeV mk_edge(int u, int v) { return std::minmax(u, v); }

struct EdgeIndex {
    std::vector<EdgeV> list;
    std::map<EdgeV, int> id;
    explicit EdgeIndex(const Graph& g) : list(g.edges()) {
        for (int i = 0; i < static_cast<int>(list.size()); ++i) id[list[i]] = i;
    }
};

// 3-faces of the embedding, outer face excluded.
std::vector<int> triangle_faces(const Embedding& emb) {
    std::vector<int> out;
    for (int f = 0; f < emb.face_count(); ++f)
        if (f != emb.outer_face() && emb.faces()[f].length() == 3) out.push_back(f);
    return out;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// The boundary edge set forms a single cycle iff it is connected and
// 2-regular; returns the cycle's vertex order in that case.
std::optional<std::vector<int>> single_cycle(const std::vector<EdgeV>& edges) {
    if (edges.size() < 3) return std::nullopt;
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj)
        if (nb.size() != 2) return std::nullopt;
    std::vector<int> cyc;
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        auto& nb = adj[cur];
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != start && cyc.size() <= edges.size());
    if (cyc.size() != edges.size()) return std::nullopt;
    return cyc;
}

void finish_block(TriangularBlock& b, const Embedding& emb) {
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.faces.begin(), b.faces.end());
    std::set<int> vs;
    for (auto [u, v] : b.edges) {
        vs.insert(u);
        vs.insert(v);
    }
    b.vertices.assign(vs.begin(), vs.end());
    std::set<int> fset(b.faces.begin(), b.faces.end());
    for (auto [u, v] : b.edges) {
        auto [f1, f2] = emb.faces_of_edge(u, v);
        if (!fset.count(f1) || !fset.count(f2)) b.boundary_edges.push_back({u, v});
    }
    b.boundary_cycle = single_cycle(b.boundary_edges);
}

// ---- catalog ----------------------------------------------------------

struct CatalogEntry {
    BlockLabel label;
    int n;
    std::vector<EdgeV> edges;
    std::vector<std::array<int, 3>> faces;
};

std::array<int, 3> tri(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> c;
        auto add = [&](BlockLabel l, int n, std::vector<EdgeV> es, std::vector<std::array<int, 3>> fs) {
            for (auto& e : es) e = mk_edge(e.first, e.second);
            std::sort(es.begin(), es.end());
            std::sort(fs.begin(), fs.end());
            c.push_back({l, n, std::move(es), std::move(fs)});
        };
        add(BlockLabel::B2, 2, {{0, 1}}, {});
        add(BlockLabel::B3, 3, {{0, 1}, {0, 2}, {1, 2}}, {tri(0, 1, 2)});
        add(BlockLabel::B4a, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, {tri(0, 1, 2), tri(1, 2, 3)});
        add(BlockLabel::B4b, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
            {tri(0, 1, 2), tri(0, 1, 3), tri(0, 2, 3)});
        // Fan over a path of four rim vertices.
        add(BlockLabel::B5a, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}},
            {tri(0, 1, 2), tri(0, 2, 3), tri(0, 3, 4)});
        // K4 on {0,1,2,3} (hub 0) with an ear 4 over the edge {1,3}.
        add(BlockLabel::B5b, 5, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}},
            {tri(0, 1, 2), tri(0, 2, 3), tri(0, 1, 3), tri(1, 4, 3)});
        // Wheel on four rim vertices.
        add(BlockLabel::B5c, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}},
            {tri(0, 1, 2), tri(0, 2, 3), tri(0, 3, 4), tri(0, 1, 4)});
        // Triangle (0,1,2) with an interior path 3-4; five triangular cells.
        std::vector<EdgeV> b5d_edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {2, 3}, {2, 4}, {1, 4}, {1, 3}};
        add(BlockLabel::B5d, 5, b5d_edges,
            {tri(0, 3, 1), tri(0, 2, 3), tri(3, 2, 4), tri(3, 4, 1), tri(2, 4, 1)});
        add(BlockLabel::B5e, 5, b5d_edges, {tri(0, 3, 1), tri(0, 2, 3), tri(3, 2, 4), tri(2, 4, 1)});
        // Six-vertex blocks with a C6 boundary.
        add(BlockLabel::B6a, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {2, 4}, {2, 5}, {1, 5}},
            {tri(0, 1, 5), tri(1, 2, 5), tri(2, 4, 5), tri(2, 3, 4)});
        add(BlockLabel::B6b, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 5}, {2, 5}, {3, 5}},
            {tri(0, 1, 5), tri(1, 2, 5), tri(2, 3, 5), tri(3, 4, 5)});
        // Six-vertex blocks with a C5 boundary.
        add(BlockLabel::B6c, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {3, 5}, {4, 5}, {1, 4}, {2, 4}, {2, 5}},
            {tri(0, 1, 4), tri(1, 2, 4), tri(2, 5, 4), tri(2, 3, 5), tri(3, 4, 5)});
        add(BlockLabel::B6d, 6, {{1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 4}, {4, 5}, {2, 4}, {2, 5}, {3, 5}, {2, 3}},
            {tri(1, 2, 4), tri(2, 4, 5), tri(2, 5, 3), tri(0, 2, 3), tri(3, 4, 5)});
        add(BlockLabel::B6e, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
            {tri(0, 1, 5), tri(1, 2, 5), tri(2, 3, 5), tri(3, 4, 5), tri(0, 4, 5)});
        add(BlockLabel::B6f, 6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}},
            {tri(0, 1, 4), tri(1, 2, 4), tri(2, 3, 4), tri(0, 3, 4), tri(0, 5, 1)});
        // Six-vertex blocks whose boundary is a C4 plus a C3.
        add(BlockLabel::B6g, 6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 5}, {4, 5}, {3, 4}, {1, 3}, {1, 4}, {1, 5}, {3, 5}},
            {tri(0, 1, 3), tri(1, 2, 5), tri(2, 3, 5), tri(1, 5, 4), tri(1, 4, 3)});
        std::vector<EdgeV> b6h_edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 5}, {4, 5}, {3, 4}, {1, 3}, {1, 4}, {2, 4}, {1, 5}};
        add(BlockLabel::B6h, 6, b6h_edges,
            {tri(0, 1, 3), tri(1, 2, 5), tri(2, 4, 5), tri(2, 3, 4), tri(1, 4, 3)});
        add(BlockLabel::B6i, 6, b6h_edges,
            {tri(0, 1, 3), tri(1, 2, 5), tri(2, 3, 4), tri(1, 4, 3), tri(1, 4, 5)});
        add(BlockLabel::B6j, 6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 5}, {4, 5}, {3, 4}, {3, 5}, {0, 4}, {2, 4}, {1, 4}},
            {tri(0, 1, 4), tri(1, 2, 4), tri(2, 3, 5), tri(3, 4, 5), tri(0, 4, 3)});
        add(BlockLabel::B6k, 6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {0, 4}, {2, 5}, {1, 5}, {1, 4}, {3, 4}, {3, 5}},
            {tri(0, 1, 4), tri(0, 4, 3), tri(3, 4, 5), tri(1, 2, 5), tri(2, 3, 5)});
        // T3 and its face-deleted variants: outer triangle (0,1,2), inner
        // triangle (3,4,5), inner t opposite outer t.
        std::vector<EdgeV> t3_edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}};
        std::vector<std::array<int, 3>> t3_faces{tri(0, 1, 5), tri(1, 2, 3), tri(0, 2, 4), tri(3, 4, 5),
                                                 tri(0, 5, 4), tri(1, 3, 5), tri(2, 4, 3)};
        add(BlockLabel::T3, 6, t3_edges, t3_faces);
        auto without = [&](const std::vector<std::array<int, 3>>& fs, std::array<int, 3> drop) {
            std::vector<std::array<int, 3>> out;
            for (auto& f : fs)
                if (f != drop) out.push_back(f);
            return out;
        };
        add(BlockLabel::B6l, 6, t3_edges, without(t3_faces, tri(3, 4, 5)));
        add(BlockLabel::B6m, 6, t3_edges, without(t3_faces, tri(0, 5, 4)));
        // Skewed twelve-edge shape: corner 0 carries three spokes.
        std::vector<EdgeV> s2_edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {0, 3}, {0, 4}, {0, 5}, {1, 3}, {2, 3}, {2, 4}};
        std::vector<std::array<int, 3>> s2_faces{tri(0, 1, 3), tri(1, 2, 3), tri(0, 2, 4), tri(2, 3, 4),
                                                 tri(0, 4, 5), tri(0, 5, 3), tri(3, 4, 5)};
        add(BlockLabel::B6n, 6, s2_edges, without(s2_faces, tri(3, 4, 5)));
        add(BlockLabel::B6o, 6, s2_edges, without(s2_faces, tri(0, 4, 5)));
        add(BlockLabel::B6p, 6, s2_edges, without(s2_faces, tri(0, 5, 3)));
        add(BlockLabel::B6q, 6, s2_edges, without(s2_faces, tri(2, 3, 4)));
        // Twelve-edge shape with an off-center inner path.
        add(BlockLabel::B6r, 6,
            {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 3}, {2, 5}, {3, 5}, {3, 4}, {1, 4}, {1, 3}},
            {tri(0, 5, 3), tri(0, 4, 1), tri(4, 3, 1), tri(3, 1, 2), tri(3, 2, 5), tri(0, 5, 2)});
        return c;
    }();
    return entries;
}

}  // namespace

std::string label_name(BlockLabel l) {
    switch (l) {
        case BlockLabel::B2: return "B2";
        case BlockLabel::B3: return "B3";
        case BlockLabel::B4a: return "B4a";
        case BlockLabel::B4b: return "B4b";
        case BlockLabel::B5a: return "B5a";
        case BlockLabel::B5b: return "B5b";
        case BlockLabel::B5c: return "B5c";
        case BlockLabel::B5d: return "B5d";
        case BlockLabel::B5e: return "B5e";
        case BlockLabel::B6a: return "B6a";
        case BlockLabel::B6b: return "B6b";
        case BlockLabel::B6c: return "B6c";
        case BlockLabel::B6d: return "B6d";
        case BlockLabel::B6e: return "B6e";
        case BlockLabel::B6f: return "B6f";
        case BlockLabel::B6g: return "B6g";
        case BlockLabel::B6h: return "B6h";
        case BlockLabel::B6i: return "B6i";
        case BlockLabel::B6j: return "B6j";
        case BlockLabel::B6k: return "B6k";
        case BlockLabel::B6l: return "B6l";
        case BlockLabel::B6m: return "B6m";
        case BlockLabel::B6n: return "B6n";
        case BlockLabel::B6o: return "B6o";
        case BlockLabel::B6p: return "B6p";
        case BlockLabel::B6q: return "B6q";
        case BlockLabel::B6r: return "B6r";
        case BlockLabel::T3: return "T3";
        case BlockLabel::LARGE: return "LARGE";
        case BlockLabel::OTHER: return "OTHER";
    }
    return "?";
}

std::vector<TriangularBlock> partition_blocks(const Embedding& emb) {
    EdgeIndex ei(emb.graph());
    Dsu dsu(static_cast<int>(ei.list.size()));
    auto tris = triangle_faces(emb);
    for (int f : tris) {
        const auto& darts = emb.faces()[f].darts;
        int e0 = ei.id.at(mk_edge(darts[0].first, darts[0].second));
        for (int i = 1; i < 3; ++i) dsu.unite(e0, ei.id.at(mk_edge(darts[i].first, darts[i].second)));
    }
    std::map<int, TriangularBlock> by_root;
    for (int i = 0; i < static_cast<int>(ei.list.size()); ++i) by_root[dsu.find(i)].edges.push_back(ei.list[i]);
    for (int f : tris) {
        const auto& darts = emb.faces()[f].darts;
        int root = dsu.find(ei.id.at(mk_edge(darts[0].first, darts[0].second)));
        by_root[root].faces.push_back(f);
    }
    std::vector<TriangularBlock> blocks;
    for (auto& [root, b] : by_root) {
        finish_block(b, emb);
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const TriangularBlock& a, const TriangularBlock& b) { return a.edges < b.edges; });
    return blocks;
}

TriangularBlock grow_block_from(const Embedding& emb, std::pair<int, int> seed) {
    seed = mk_edge(seed.first, seed.second);
    if (!emb.graph().has_edge(seed.first, seed.second)) throw std::invalid_argument("seed edge not in graph");
    std::set<EdgeV> edges{seed};
    std::set<int> faces;
    std::vector<EdgeV> queue{seed};
    while (!queue.empty()) {
        auto [u, v] = queue.back();
        queue.pop_back();
        for (int f : {emb.face_of_dart(u, v), emb.face_of_dart(v, u)}) {
            if (f == emb.outer_face() || emb.faces()[f].length() != 3 || faces.count(f)) continue;
            faces.insert(f);
            for (const auto& d : emb.faces()[f].darts) {
                EdgeV e = mk_edge(d.first, d.second);
                if (edges.insert(e).second) queue.push_back(e);
            }
        }
    }
    TriangularBlock b;
    b.edges.assign(edges.begin(), edges.end());
    b.faces.assign(faces.begin(), faces.end());
    finish_block(b, emb);
    return b;
}

BlockLabel classify(const TriangularBlock& b, const Embedding& emb) {
    int nb = static_cast<int>(b.vertices.size());
    if (nb <= 6) {
        // Local relabeling, then exact (edge set, face set) isomorphism.
        std::map<int, int> local;
        for (int i = 0; i < nb; ++i) local[b.vertices[i]] = i;
        std::vector<EdgeV> edges;
        for (auto [u, v] : b.edges) edges.push_back(mk_edge(local[u], local[v]));
        std::sort(edges.begin(), edges.end());
        std::vector<std::array<int, 3>> faces;
        for (int f : b.faces) {
            auto w = emb.faces()[f].walk();
            faces.push_back(tri(local[w[0]], local[w[1]], local[w[2]]));
        }
        std::sort(faces.begin(), faces.end());
        std::vector<int> deg(nb, 0);
        for (auto [u, v] : edges) {
            deg[u]++;
            deg[v]++;
        }
        for (const auto& entry : catalog()) {
            if (entry.n != nb || entry.edges.size() != edges.size() || entry.faces.size() != faces.size()) continue;
            std::vector<int> perm(nb);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<int> edeg(nb, 0);
            for (auto [u, v] : entry.edges) {
                edeg[u]++;
                edeg[v]++;
            }
            do {
                bool ok = true;
                for (int i = 0; i < nb && ok; ++i) ok = deg[i] == edeg[perm[i]];
                if (!ok) continue;
                std::vector<EdgeV> pe;
                for (auto [u, v] : edges) pe.push_back(mk_edge(perm[u], perm[v]));
                std::sort(pe.begin(), pe.end());
                if (pe != entry.edges) continue;
                std::vector<std::array<int, 3>> pf;
                for (auto f : faces) pf.push_back(tri(perm[f[0]], perm[f[1]], perm[f[2]]));
                std::sort(pf.begin(), pf.end());
                if (pf == entry.faces) return entry.label;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    if (is_large(b)) return BlockLabel::LARGE;
    return BlockLabel::OTHER;
}

Rat f_star(const Embedding& emb, int u, int v) {
    auto [f1, f2] = emb.faces_of_edge(u, v);
    if (f1 == f2) throw std::invalid_argument("edge borders one face twice (bridge); host not 2-connected");
    auto weight = [&](int f) {
        int l = emb.faces()[f].length();
        return std::max(Rat(1, l), Rat(1, 8));
    };
    return weight(f1) + weight(f2);
}

BlockMetrics block_metrics(const TriangularBlock& b, const Embedding& emb) {
    BlockMetrics m;
    for (auto [u, v] : b.edges) {
        auto [f1, f2] = emb.faces_of_edge(u, v);
        bool on8 = emb.faces()[f1].length() >= 8 || emb.faces()[f2].length() >= 8;
        (on8 ? m.e_boundary_8plus : m.e_internal)++;
        m.f_b += f_star(emb, u, v);
    }
    return m;
}

bool is_large(const TriangularBlock& b) {
    if (!b.boundary_cycle) return false;
    const auto& cyc = *b.boundary_cycle;
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : b.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Paths of every length 1..5 inside the block between each pair of
    // boundary vertices; the target is only ever used as an endpoint.
    for (size_t i = 0; i < cyc.size(); ++i) {
        for (size_t j = i + 1; j < cyc.size(); ++j) {
            int a = cyc[i], target = cyc[j];
            std::array<bool, 6> found{};
            std::set<int> used{a};
            std::function<void(int, int)> dfs = [&](int v, int len) {
                for (int w : adj[v]) {
                    if (w == target) {
                        if (len + 1 <= 5) found[len + 1] = true;
                        continue;
                    }
                    if (used.count(w) || len + 1 > 4) continue;
                    used.insert(w);
                    dfs(w, len + 1);
                    used.erase(w);
                }
            };
            dfs(a, 0);
            for (int l = 1; l <= 5; ++l)
                if (!found[l]) return false;
        }
    }
    return true;
}

SmallBlocksResult small_block_sets(const Embedding& emb, const std::vector<TriangularBlock>& blocks) {
    SmallBlocksResult out;
    std::vector<char> large(blocks.size(), 0);
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        large[i] = is_large(blocks[i]);
        if (!large[i]) out.small_block_ids.push_back(i);
    }
    EdgeIndex ei(emb.graph());
    std::vector<int> block_of_edge(ei.list.size(), -1);
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        for (auto e : blocks[i].edges) block_of_edge[ei.id.at(e)] = i;

    std::set<int> face_in_blocks;  // 3-faces owned by any block
    for (const auto& b : blocks) face_in_blocks.insert(b.faces.begin(), b.faces.end());

    std::vector<char> in_set(blocks.size(), 0);
    std::set<int> seven;
    for (int seed : out.small_block_ids) {
        if (in_set[seed]) continue;
        SmallBlockSet s;
        std::set<int> captured;
        std::vector<int> bq{seed};
        in_set[seed] = 1;
        while (!bq.empty()) {
            int bi = bq.back();
            bq.pop_back();
            s.block_ids.push_back(bi);
            if (large[bi]) s.contains_large = true;
            // Exterior faces of this member.
            std::set<int> ext;
            std::set<int> own(blocks[bi].faces.begin(), blocks[bi].faces.end());
            for (auto [u, v] : blocks[bi].edges)
                for (int f : {emb.face_of_dart(u, v), emb.face_of_dart(v, u)})
                    if (!own.count(f)) ext.insert(f);
            for (int f : ext) {
                int len = emb.faces()[f].length();
                if (len == 7) seven.insert(f);
                if (len < 3 || len > 6 || face_in_blocks.count(f)) continue;
                if (!captured.insert(f).second) continue;
                for (const auto& d : emb.faces()[f].darts) {
                    int nb = block_of_edge[ei.id.at(mk_edge(d.first, d.second))];
                    if (nb >= 0 && !in_set[nb]) {
                        in_set[nb] = 1;
                        bq.push_back(nb);
                    }
                }
            }
        }
        std::sort(s.block_ids.begin(), s.block_ids.end());
        s.captured_faces.assign(captured.begin(), captured.end());
        std::set<int> vs;
        int tri_faces = 0;
        std::set<int> interior(captured.begin(), captured.end());
        std::vector<EdgeV> boundary;
        for (int bi : s.block_ids) {
            for (int v : blocks[bi].vertices) vs.insert(v);
            tri_faces += static_cast<int>(blocks[bi].faces.size());
            interior.insert(blocks[bi].faces.begin(), blocks[bi].faces.end());
        }
        for (int bi : s.block_ids)
            for (auto [u, v] : blocks[bi].edges) {
                auto [f1, f2] = emb.faces_of_edge(u, v);
                if (!interior.count(f1) || !interior.count(f2)) boundary.push_back({u, v});
            }
        s.vertices.assign(vs.begin(), vs.end());
        s.interior_face_count = tri_faces + static_cast<int>(captured.size());
        s.boundary_cycle = single_cycle(boundary);
        out.sets.push_back(std::move(s));
    }
    out.seven_faces.assign(seven.begin(), seven.end());

    for (int bi : out.small_block_ids) {
        BlockMetrics m = block_metrics(blocks[bi], emb);
        out.summary.k1 += m.e_boundary_8plus;
        out.summary.k2 += m.e_internal;
    }
    for (const auto& s : out.sets) out.summary.f_k += s.interior_face_count;
    return out;
}

NormalizationTargets normalization_targets(const Embedding& emb, const std::vector<TriangularBlock>& blocks,
                                           const SmallBlocksResult& sbs) {
    NormalizationTargets t;
    for (auto [u, v] : emb.graph().edges()) {
        auto [f1, f2] = emb.faces_of_edge(u, v);
        if (emb.faces()[f1].length() >= 8 && emb.faces()[f2].length() >= 8) t.trivial_edges.push_back({u, v});
    }
    for (int i = 0; i < static_cast<int>(sbs.sets.size()); ++i) {
        const auto& s = sbs.sets[i];
        if (s.vertices.size() < 7 && s.boundary_cycle && !s.contains_large) t.small_set_ids.push_back(i);
    }
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (is_large(blocks[i]) && classify(blocks[i], emb) != BlockLabel::T3) t.large_block_ids.push_back(i);
    return t;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << title << "\n";
    if (!applicable) {
        os << "inapplicable:";
        for (const auto& h : hypothesis_violations) os << " [" << h << "]";
        os << "\n";
    } else {
        for (const auto& h : hypothesis_violations) os << "warning: " << h << "\n";
    }
    for (const auto& f : findings)
        os << f.subject << " " << f.quantity << " " << f.bound << " " << (f.pass ? "pass" : "FAIL") << "\n";
    os << "total " << rat_str(lhs) << " vs " << rat_str(rhs) << " " << (holds ? "pass" : "FAIL") << "\n";
    return os.str();
}

namespace {

struct HostFacts {
    bool two_connected = false;
    bool c7_free = false;
    int min_degree = 0;
    int min_sum = 0;
    int n = 0;
};

HostFacts host_facts(const Embedding& emb) {
    HostFacts h;
    h.n = emb.graph().order();
    if (h.n == 0) return h;
    PreconditionReport pre = validate_preconditions(emb.graph());
    h.two_connected = pre.is_two_connected;
    h.min_degree = pre.min_degree;
    h.min_sum = pre.min_adjacent_degree_sum;
    h.c7_free = !find_cycle(emb.graph(), 7).has_value();
    return h;
}

}  // namespace

AuditReport check_8plus_t3_incidence(const Embedding& emb) {
    AuditReport r;
    r.title = "8plus-face T3 incidence bound";
    HostFacts h = host_facts(emb);
    if (!h.two_connected) r.hypothesis_violations.push_back("not 2-connected");
    if (!h.c7_free) r.hypothesis_violations.push_back("contains C7");
    auto blocks = partition_blocks(emb);
    std::vector<int> t3s;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (classify(blocks[i], emb) == BlockLabel::T3) t3s.push_back(i);
    for (int f = 0; f < emb.face_count(); ++f) {
        int l = emb.faces()[f].length();
        if (l < 8) continue;
        const auto& darts = emb.faces()[f].darts;
        int sharing2 = 0;
        for (int bi : t3s) {
            std::set<EdgeV> bedges(blocks[bi].edges.begin(), blocks[bi].edges.end());
            std::vector<int> pos;
            for (int i = 0; i < l; ++i)
                if (bedges.count(mk_edge(darts[i].first, darts[i].second))) pos.push_back(i);
            if (pos.size() < 2) continue;
            ++sharing2;
            bool consecutive = pos.size() == 2 && ((pos[1] - pos[0] == 1) || (pos[0] == 0 && pos[1] == l - 1));
            if (!consecutive)
                r.findings.push_back({"face " + std::to_string(f) + " block " + std::to_string(bi),
                                      "shared_edges=" + std::to_string(pos.size()), "consecutive pair", false});
        }
        bool pass = sharing2 <= l - 8;
        if (sharing2 > 0 || !pass)
            r.findings.push_back({"face " + std::to_string(f), "t3_sharing_two=" + std::to_string(sharing2),
                                  "<= " + std::to_string(l - 8), pass});
        r.lhs += sharing2;
        r.rhs += l - 8;
    }
    for (const auto& f : r.findings) r.holds = r.holds && f.pass;
    return r;
}

AuditReport check_t3_face_sizes(const Embedding& emb) {
    AuditReport r;
    r.title = "T3 incident face sizes";
    HostFacts h = host_facts(emb);
    if (!h.two_connected) r.hypothesis_violations.push_back("not 2-connected");
    if (!h.c7_free) r.hypothesis_violations.push_back("contains C7");
    auto blocks = partition_blocks(emb);
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
        const auto& b = blocks[bi];
        if (classify(b, emb) != BlockLabel::T3) continue;
        if (static_cast<int>(b.edges.size()) == emb.graph().size()) {
            r.findings.push_back({"block " + std::to_string(bi), "covers whole graph", "exempt (G = T3)", true});
            continue;
        }
        std::set<int> own(b.faces.begin(), b.faces.end());
        std::set<int> ext;
        for (auto [u, v] : b.edges)
            for (int f : {emb.face_of_dart(u, v), emb.face_of_dart(v, u)})
                if (!own.count(f)) ext.insert(f);
        for (int f : ext) {
            int l = emb.faces()[f].length();
            bool pass = l >= 8;
            r.findings.push_back({"block " + std::to_string(bi) + " face " + std::to_string(f),
                                  "length=" + std::to_string(l), ">= 8", pass});
        }
    }
    for (const auto& f : r.findings) r.holds = r.holds && f.pass;
    return r;
}

AuditReport audit_small_block_inequality(const Embedding& emb) {
    AuditReport r;
    r.title = "small-block discharging inequality (41/72, 11/18)";
    HostFacts h = host_facts(emb);
    if (h.n < 8) r.hypothesis_violations.push_back("n < 8");
    if (!h.two_connected) r.hypothesis_violations.push_back("not 2-connected");
    if (h.min_degree < 3) r.hypothesis_violations.push_back("min degree < 3");
    if (h.min_sum < 7 && emb.graph().size() > 0) r.hypothesis_violations.push_back("adjacent degree sum < 7");
    if (!h.c7_free) r.hypothesis_violations.push_back("contains C7");
    if (!h.two_connected) {
        r.applicable = false;
        return r;
    }
    auto blocks = partition_blocks(emb);
    auto sbs = small_block_sets(emb, blocks);
    auto targets = normalization_targets(emb, blocks, sbs);
    if (!targets.trivial_edges.empty()) r.hypothesis_violations.push_back("not normalized: trivial edge present");
    if (!targets.small_set_ids.empty())
        r.hypothesis_violations.push_back("not normalized: small block set on < 7 vertices with cycle boundary");
    if (!targets.large_block_ids.empty())
        r.hypothesis_violations.push_back("not normalized: large non-T3 block present");
    if (!sbs.seven_faces.empty()) r.hypothesis_violations.push_back("7-face adjacent to small block (C7 witness)");
    r.applicable = r.hypothesis_violations.empty();
    const Rat cb(41, 72), ci(11, 18);
    for (int bi : sbs.small_block_ids) {
        BlockMetrics m = block_metrics(blocks[bi], emb);
        Rat bound = cb * m.e_boundary_8plus + ci * m.e_internal;
        r.findings.push_back({"block " + std::to_string(bi) + " (" + label_name(classify(blocks[bi], emb)) + ")",
                              "f_B=" + rat_str(m.f_b),
                              "<= " + rat_str(bound) + " (e8=" + std::to_string(m.e_boundary_8plus) +
                                  " eint=" + std::to_string(m.e_internal) + ")",
                              m.f_b <= bound});
        r.lhs += m.f_b;
        r.rhs += bound;
    }
    r.holds = r.lhs <= r.rhs;
    return r;
}

AuditReport audit_no_8face_inequality(const Embedding& emb) {
    AuditReport r;
    r.title = "no-8plus-face inequality (9/16)";
    HostFacts h = host_facts(emb);
    if (h.n < 7) r.hypothesis_violations.push_back("n < 7");
    if (!h.two_connected) r.hypothesis_violations.push_back("not 2-connected");
    if (h.min_degree < 3) r.hypothesis_violations.push_back("min degree < 3");
    if (!h.c7_free) r.hypothesis_violations.push_back("contains C7");
    bool has8 = false;
    for (const auto& f : emb.faces()) has8 = has8 || f.length() >= 8;
    if (has8) r.hypothesis_violations.push_back("(8+)-face present");
    r.applicable = r.hypothesis_violations.empty();
    // Degree sums below 7 do not gate this audit; note them.
    if (h.min_sum < 7 && emb.graph().size() > 0)
        r.hypothesis_violations.push_back("note: adjacent degree sum < 7");
    r.lhs = Rat(emb.face_count());
    r.rhs = Rat(9, 16) * emb.graph().size();
    r.holds = r.lhs <= r.rhs;
    r.findings.push_back({"graph", "f=" + std::to_string(emb.face_count()),
                          "<= 9/16 * " + std::to_string(emb.graph().size()) + " = " + rat_str(r.rhs), r.holds});
    return r;
}

DualGraph build_dual(const Embedding& emb, const std::vector<TriangularBlock>& blocks,
                     const SmallBlocksResult& sbs) {
    DualGraph d;
    // Owner of each face: a T3 node, a small-set node, or a residual face node.
    int nf = emb.face_count();
    std::vector<int> owner(nf, -1);  // node index
    std::vector<int> t3_node(blocks.size(), -1);
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
        if (classify(blocks[bi], emb) != BlockLabel::T3) continue;
        t3_node[bi] = static_cast<int>(d.nodes.size());
        d.nodes.push_back({DualNode::Kind::T3Block, bi, 0});
        for (int f : blocks[bi].faces) owner[f] = t3_node[bi];
    }
    for (int si = 0; si < static_cast<int>(sbs.sets.size()); ++si) {
        int node = static_cast<int>(d.nodes.size());
        d.nodes.push_back({DualNode::Kind::SmallSet, si, 0});
        for (int bi : sbs.sets[si].block_ids)
            for (int f : blocks[bi].faces) owner[f] = node;
        for (int f : sbs.sets[si].captured_faces) owner[f] = node;
    }
    for (int f = 0; f < nf; ++f)
        if (owner[f] == -1) {
            owner[f] = static_cast<int>(d.nodes.size());
            d.nodes.push_back({DualNode::Kind::ResidualFace, f, emb.faces()[f].length()});
        }
    for (auto [u, v] : emb.graph().edges()) {
        auto [f1, f2] = emb.faces_of_edge(u, v);
        if (owner[f1] != owner[f2]) d.edges.push_back({owner[f1], owner[f2]});
    }
    return d;
}

}  // namespace planar7
