#include "planar7/embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planar7 {

std::vector<int> Face::walk() const {
    std::vector<int> w;
    w.reserve(darts.size());
    for (const auto& d : darts) w.push_back(d.first);
    return w;
}

bool Face::contains_vertex(int v) const {
    for (const auto& d : darts)
        if (d.first == v) return true;
    return false;
}

long long FaceHistogram::total_length() const {
    long long t = 0;
    for (auto [l, c] : counts) t += static_cast<long long>(l) * c;
    return t;
}

Embedding Embedding::from_rotations(const Graph& g, std::vector<std::vector<int>> rot,
                                    std::optional<int> outer) {
    if (static_cast<int>(rot.size()) != g.order())
        throw std::invalid_argument("rotation system size mismatch");
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
    Embedding e;
    e.g_ = g;
    e.rot_ = std::move(rot);
    e.trace_faces();
    if (outer) {
        if (*outer < 0 || *outer >= e.face_count()) throw std::invalid_argument("outer face id out of range");
        e.outer_face_ = *outer;
    } else {
        // Default: a face of maximum length, lowest id on ties.
        int best = 0;
        for (int f = 1; f < e.face_count(); ++f)
            if (e.faces_[f].length() > e.faces_[best].length()) best = f;
        e.outer_face_ = e.face_count() == 0 ? -1 : best;
    }
    return e;
}

void Embedding::trace_faces() {
    faces_.clear();
    face_of_.clear();
    for (int u = 0; u < g_.order(); ++u) {
        for (int v : rot_[u]) {
            if (face_of_.count(dart_key(u, v))) continue;
            Face f;
            int a = u, b = v;
            do {
                face_of_[dart_key(a, b)] = static_cast<int>(faces_.size());
                f.darts.push_back({a, b});
                // successor of a in rotation at b
                const auto& rb = rot_[b];
                int pos = -1;
                for (int i = 0; i < static_cast<int>(rb.size()); ++i)
                    if (rb[i] == a) {
                        pos = i;
                        break;
                    }
                int w = rb[(pos + 1) % rb.size()];
                a = b;
                b = w;
            } while (!(a == u && b == v));
            faces_.push_back(std::move(f));
        }
    }
}

int Embedding::face_of_dart(int u, int v) const {
    auto it = face_of_.find(dart_key(u, v));
    if (it == face_of_.end()) throw std::invalid_argument("no such dart");
    return it->second;
}

std::pair<int, int> Embedding::faces_of_edge(int u, int v) const {
    return {face_of_dart(u, v), face_of_dart(v, u)};
}

FaceHistogram Embedding::face_histogram() const {
    FaceHistogram h;
    for (const auto& f : faces_) h.counts[f.length()]++;
    return h;
}

Embedding Embedding::from_faces(int n, const std::vector<std::vector<int>>& walks,
                                std::optional<int> outer_walk) {
    // Occurrences of each undirected edge: (walk index, position, forward?).
    struct Occ {
        int walk, pos;
        bool fwd;
    };
    std::map<std::pair<int, int>, std::vector<Occ>> occ;
    for (int fi = 0; fi < static_cast<int>(walks.size()); ++fi) {
        const auto& w = walks[fi];
        if (w.size() < 2) throw std::invalid_argument("face walk shorter than 2");
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()];
            if (a == b || a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("bad face walk entry");
            occ[{std::min(a, b), std::max(a, b)}].push_back({fi, i, a < b});
        }
    }
    for (auto& [e, os] : occ)
        if (os.size() != 2)
            throw std::invalid_argument("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                        " appears " + std::to_string(os.size()) + " times across faces");

    // Orient faces consistently: shared edges must be traversed oppositely.
    std::vector<int> flip(walks.size(), -1);
    for (int s = 0; s < static_cast<int>(walks.size()); ++s) {
        if (flip[s] != -1) continue;
        flip[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& w = walks[f];
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                auto& os = occ[{std::min(a, b), std::max(a, b)}];
                const Occ &o1 = os[0], &o2 = os[1];
                const Occ& other = (o1.walk == f && o1.pos == i) ? o2 : o1;
                if (other.walk == f && other.pos == i) continue;  // self-paired (shouldn't happen)
                bool same_dir = (o1.fwd == o2.fwd);
                if (other.walk == f) {
                    // Edge twice in one face: must be antiparallel as given.
                    if (same_dir) throw std::invalid_argument("face repeats an edge in the same direction");
                    continue;
                }
                int need = same_dir ? 1 - flip[f] : flip[f];
                if (flip[other.walk] == -1) {
                    flip[other.walk] = need;
                    stack.push_back(other.walk);
                } else if (flip[other.walk] != need) {
                    throw std::invalid_argument("face walks are not orientable");
                }
            }
        }
    }

    // Corner successor map per vertex: arriving from x at v, leave toward y.
    std::vector<std::map<int, int>> succ(n);
    for (int fi = 0; fi < static_cast<int>(walks.size()); ++fi) {
        std::vector<int> w = walks[fi];
        if (flip[fi]) std::reverse(w.begin(), w.end());
        int L = static_cast<int>(w.size());
        for (int i = 0; i < L; ++i) {
            int x = w[i], v = w[(i + 1) % L], y = w[(i + 2) % L];
            if (succ[v].count(x)) throw std::invalid_argument("inconsistent corners at vertex " + std::to_string(v));
            succ[v][x] = y;
        }
    }

    Graph g(n);
    for (const auto& [e, os] : occ) g.add_edge(e.first, e.second);

    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        int start = g.neighbors(v).front();
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw std::invalid_argument("open corner at vertex " + std::to_string(v));
            cur = it->second;
        } while (cur != start && static_cast<int>(rot[v].size()) <= g.degree(v));
        if (static_cast<int>(rot[v].size()) != g.degree(v))
            throw std::invalid_argument("corners at vertex " + std::to_string(v) + " do not form a single cycle");
    }

    Embedding e = from_rotations(g, std::move(rot));
    if (e.face_count() != static_cast<int>(walks.size()))
        throw std::invalid_argument("face walks do not describe a planar embedding (face count mismatch)");
    if (outer_walk) {
        // Identify the traced face holding the outer walk's first dart.
        std::vector<int> w = walks[*outer_walk];
        if (flip[*outer_walk]) std::reverse(w.begin(), w.end());
        e.set_outer_face(e.face_of_dart(w[0], w[1]));
    }
    return e;
}

const std::vector<Face>& trace_faces(const Embedding& emb) { return emb.faces(); }

FaceHistogram face_histogram(const Embedding& emb) { return emb.face_histogram(); }

bool euler_check(const Embedding& emb) {
    const Graph& g = emb.graph();
    auto comp = component_ids(g);
    int nc = g.order() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    std::vector<long long> V(nc, 0), E(nc, 0), F(nc, 0);
    for (int v = 0; v < g.order(); ++v) V[comp[v]]++;
    for (auto [u, v] : g.edges()) E[comp[u]]++;
    for (const auto& f : emb.faces()) F[comp[f.darts[0].first]]++;
    for (int c = 0; c < nc; ++c) {
        if (E[c] == 0 && V[c] == 1) F[c] = 1;  // isolated vertex: one face by convention
        if (V[c] - E[c] + F[c] != 2) return false;
    }
    return true;
}

Embedding dual_embedding(const Embedding& emb) {
    if (!is_connected(emb.graph()) || emb.graph().size() == 0)
        throw std::invalid_argument("dual requires a connected host with edges");
    int nf = emb.face_count();
    // Vertex v of the dual = face v of the primal; its rotation lists the
    // neighboring faces in boundary-walk order.
    std::vector<std::vector<int>> rot(nf);
    for (int f = 0; f < nf; ++f)
        for (const auto& [u, v] : emb.faces()[f].darts) rot[f].push_back(emb.face_of_dart(v, u));
    Graph dg(nf);
    std::set<std::pair<int, int>> seen;
    for (int f = 0; f < nf; ++f)
        for (int h : rot[f]) {
            auto key = std::minmax(f, h);
            if (f != h && !seen.count({key.first, key.second})) {
                seen.insert({key.first, key.second});
                dg.add_edge(f, h);
            }
        }
    // Only valid when the dual is simple (each face pair shares <= 1 edge and
    // no bridges); that holds for the polyhedral graphs this is used on.
    for (int f = 0; f < nf; ++f) {
        std::vector<int> s = rot[f];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("dual has parallel edges; not supported");
    }
    return Embedding::from_rotations(dg, rot);
}

DualGraph reduce_dual(const DualGraph& d) {
    DualGraph r;
    r.reduced = true;
    std::vector<int> remap(d.nodes.size(), -1);
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        if (d.nodes[i].kind == DualNode::Kind::SmallSet) continue;
        remap[i] = static_cast<int>(r.nodes.size());
        r.nodes.push_back(d.nodes[i]);
    }
    std::set<std::pair<int, int>> kept;
    for (auto [a, b] : d.edges) {
        if (remap[a] == -1 || remap[b] == -1) continue;
        int x = remap[a], y = remap[b];
        if (x > y) std::swap(x, y);
        kept.insert({x, y});
    }
    r.edges.assign(kept.begin(), kept.end());
    return r;
}

std::string dual_to_dot(const DualGraph& d) {
    std::ostringstream os;
    os << "graph dual {\n";
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        const auto& n = d.nodes[i];
        os << "  n" << i << " [label=\"";
        switch (n.kind) {
            case DualNode::Kind::ResidualFace: os << "face len=" << n.face_length; break;
            case DualNode::Kind::T3Block: os << "T3 #" << n.ref; break;
            case DualNode::Kind::SmallSet: os << "sbs #" << n.ref; break;
        }
        os << "\"];\n";
    }
    for (auto [a, b] : d.edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace planar7
