#include "planar7/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planar7 {

namespace {

// DMP state for one biconnected block: faces maintained as directed vertex
// cycles of the embedded subgraph H; rotations derived at the end.
struct Dmp {
    const Graph& g;
    std::vector<char> in_h;                       // vertex in H?
    std::set<std::pair<int, int>> h_edges;        // edges of H (u < v)
    std::vector<std::vector<int>> face_cycles;    // boundary cycles of H's faces

    explicit Dmp(const Graph& g_) : g(g_), in_h(g_.order(), 0) {}

    bool has_h_edge(int u, int v) const { return h_edges.count(std::minmax(u, v)) > 0; }

    struct Fragment {
        std::vector<int> interior;     // component of G - V(H); empty for a chord
        std::vector<int> attachments;  // H-vertices, sorted
        std::pair<int, int> chord{-1, -1};
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> frags;
        std::vector<int> comp(g.order(), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (in_h[s] || comp[s] != -1) continue;
            Fragment f;
            comp[s] = s;
            std::vector<int> stack{s};
            std::set<int> att;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                f.interior.push_back(v);
                for (int w : g.neighbors(v)) {
                    if (in_h[w])
                        att.insert(w);
                    else if (comp[w] == -1) {
                        comp[w] = s;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(f.interior.begin(), f.interior.end());
            f.attachments.assign(att.begin(), att.end());
            frags.push_back(std::move(f));
        }
        for (int u = 0; u < g.order(); ++u) {
            if (!in_h[u]) continue;
            for (int v : g.neighbors(u)) {
                if (u < v && in_h[v] && !has_h_edge(u, v)) {
                    Fragment f;
                    f.attachments = {u, v};
                    f.chord = {u, v};
                    frags.push_back(std::move(f));
                }
            }
        }
        return frags;
    }

    std::vector<int> admissible_faces(const Fragment& f) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(face_cycles.size()); ++i) {
            const auto& cyc = face_cycles[i];
            bool ok = true;
            for (int a : f.attachments)
                if (std::find(cyc.begin(), cyc.end(), a) == cyc.end()) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(i);
        }
        return out;
    }

    // Path between two attachments through the fragment interior (BFS,
    // lowest-id neighbors first for determinism).
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord.first != -1) return {f.chord.first, f.chord.second};
        int a = f.attachments[0], b = f.attachments[1];
        std::set<int> inside(f.interior.begin(), f.interior.end());
        std::vector<int> prev(g.order(), -2);
        std::vector<int> queue;
        for (int w : g.neighbors(a))
            if (inside.count(w) && prev[w] == -2) {
                prev[w] = -1;
                queue.push_back(w);
            }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (w == b) {
                    std::vector<int> path{b};
                    for (int x = v; x != -1; x = prev[x]) path.push_back(x);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (inside.count(w) && prev[w] == -2) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        throw std::logic_error("fragment attachments not connected through interior");
    }

    void embed_path(const std::vector<int>& path, int face_id) {
        // Add interior path vertices/edges to H and split the face.
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            in_h[path[i]] = 1;
            h_edges.insert(std::minmax(path[i], path[i + 1]));
        }
        in_h[path.back()] = 1;
        std::vector<int> cyc = face_cycles[face_id];
        int m = static_cast<int>(cyc.size());
        int ia = -1, ib = -1;
        for (int i = 0; i < m; ++i) {
            if (cyc[i] == path.front()) ia = i;
            if (cyc[i] == path.back()) ib = i;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        std::vector<int> f1(path.begin(), path.end());  // a .. b
        for (int i = (ib + 1) % m; i != ia; i = (i + 1) % m) f1.push_back(cyc[i]);
        std::vector<int> f2(path.rbegin(), path.rend());  // b .. a
        for (int i = (ia + 1) % m; i != ib; i = (i + 1) % m) f2.push_back(cyc[i]);
        face_cycles[face_id] = std::move(f1);
        face_cycles.push_back(std::move(f2));
    }

    // Returns face cycles of a planar embedding, or nullopt if nonplanar.
    std::optional<std::vector<std::vector<int>>> run() {
        // Start from any cycle: walk lowest-id neighbors until a repeat.
        std::vector<int> walk{0};
        std::vector<int> at(g.order(), -1);
        at[0] = 0;
        int prev = -1, cur = 0;
        std::vector<int> cycle;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            assert(next != -1);
            if (at[next] != -1) {
                cycle.assign(walk.begin() + at[next], walk.end());
                break;
            }
            at[next] = static_cast<int>(walk.size());
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        for (int v : cycle) in_h[v] = 1;
        for (size_t i = 0; i < cycle.size(); ++i)
            h_edges.insert(std::minmax(cycle[i], cycle[(i + 1) % cycle.size()]));
        face_cycles.push_back(cycle);
        face_cycles.push_back({cycle.rbegin(), cycle.rend()});

        while (h_edges.size() < static_cast<size_t>(g.size())) {
            auto frags = fragments();
            assert(!frags.empty());
            int chosen = -1, chosen_face = -1;
            bool have_single = false;
            for (int i = 0; i < static_cast<int>(frags.size()); ++i) {
                auto adm = admissible_faces(frags[i]);
                if (adm.empty()) return std::nullopt;  // nonplanar
                if (adm.size() == 1 && !have_single) {
                    have_single = true;
                    chosen = i;
                    chosen_face = adm[0];
                }
            }
            if (!have_single) {
                chosen = 0;
                chosen_face = admissible_faces(frags[0])[0];
            }
            embed_path(alpha_path(frags[chosen]), chosen_face);
        }
        return face_cycles;
    }
};

// Embeds one biconnected block (n >= 3). Returns rotations, or nullopt.
std::optional<std::vector<std::vector<int>>> embed_block(const Graph& g) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return std::nullopt;
    Dmp dmp(g);
    auto fc = dmp.run();
    if (!fc) return std::nullopt;
    Embedding emb = Embedding::from_faces(g.order(), *fc);
    return emb.rotations();
}

bool is_planar_impl(const Graph& g) {
    for (const auto& b : biconnected_blocks(g)) {
        if (b.graph.order() < 3) continue;
        if (!embed_block(b.graph)) return false;
    }
    return true;
}

Graph remove_edge(const Graph& g, std::pair<int, int> e) {
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        if (std::make_pair(u, v) != e) h.add_edge(u, v);
    return h;
}

KuratowskiWitness extract_witness(Graph g) {
    // Greedy edge-minimalization: an edge-minimal nonplanar graph is a
    // subdivision of K5 or K3,3 (plus isolated vertices).
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto e : g.edges()) {
            Graph h = remove_edge(g, e);
            if (!is_planar_impl(h)) {
                g = std::move(h);
                shrunk = true;
                break;
            }
        }
    }
    KuratowskiWitness w;
    w.edges = g.edges();
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) w.branch_vertices.push_back(v);
    w.kind = w.branch_vertices.size() == 5 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
    return w;
}

}  // namespace

std::string KuratowskiWitness::describe() const {
    std::ostringstream os;
    os << (kind == Kind::K5 ? "K5" : "K3,3") << " subdivision on branch vertices";
    for (int v : branch_vertices) os << " " << v;
    return os.str();
}

bool is_planar(const Graph& g) { return is_planar_impl(g); }

PlanarityResult test_planarity(const Graph& g) {
    std::vector<std::vector<int>> rot(g.order());
    for (const auto& b : biconnected_blocks(g)) {
        if (b.graph.order() == 2) {
            rot[b.vertices[0]].push_back(b.vertices[1]);
            rot[b.vertices[1]].push_back(b.vertices[0]);
            continue;
        }
        auto block_rot = embed_block(b.graph);
        if (!block_rot) return extract_witness(g);
        for (int lv = 0; lv < b.graph.order(); ++lv)
            for (int lw : (*block_rot)[lv]) rot[b.vertices[lv]].push_back(b.vertices[lw]);
    }
    return Embedding::from_rotations(g, std::move(rot));
}

}  // namespace planar7
