#include "planar7/transform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planar7 {

namespace {

using EdgeV = std::pair<int, int>;
EdgeV mk_edge(int u, int v) { return std::minmax(u, v); }

// Starts the cycle at its minimum vertex, heading toward the smaller of its
// two cycle neighbors, so targets are reproducible.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto mi = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mi, cyc.end());
    if (cyc.size() >= 3 && cyc[1] > cyc.back()) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

ReplacementTarget target_from_region(const Embedding& emb, ReplacementTarget::Kind kind,
                                     const std::vector<EdgeV>& edges, const std::vector<int>& faces,
                                     const std::vector<int>& cycle, const std::vector<int>& vertices) {
    ReplacementTarget t;
    t.kind = kind;
    t.region_edges = edges;
    t.interior_faces = faces;
    t.boundary_cycle = canonical_cycle(cycle);
    std::set<int> on_cycle(cycle.begin(), cycle.end());
    for (int v : vertices)
        if (!on_cycle.count(v)) t.interior_vertices.push_back(v);
    (void)emb;
    return t;
}

}  // namespace

std::optional<ReplacementTarget> find_target(const Embedding& emb) {
    auto blocks = partition_blocks(emb);
    auto sbs = small_block_sets(emb, blocks);
    auto targets = normalization_targets(emb, blocks, sbs);
    if (!targets.trivial_edges.empty()) {
        ReplacementTarget t;
        t.kind = ReplacementTarget::Kind::TrivialEdge;
        t.edge = *std::min_element(targets.trivial_edges.begin(), targets.trivial_edges.end());
        t.region_edges = {t.edge};
        return t;
    }
    if (!targets.small_set_ids.empty()) {
        int best = -1;
        for (int si : targets.small_set_ids)
            if (best == -1 || sbs.sets[si].vertices < sbs.sets[best].vertices) best = si;
        const auto& s = sbs.sets[best];
        std::set<EdgeV> es;
        std::vector<int> faces;
        for (int bi : s.block_ids) {
            es.insert(blocks[bi].edges.begin(), blocks[bi].edges.end());
            faces.insert(faces.end(), blocks[bi].faces.begin(), blocks[bi].faces.end());
        }
        faces.insert(faces.end(), s.captured_faces.begin(), s.captured_faces.end());
        std::sort(faces.begin(), faces.end());
        return target_from_region(emb, ReplacementTarget::Kind::SmallSet,
                                  std::vector<EdgeV>(es.begin(), es.end()), faces, *s.boundary_cycle, s.vertices);
    }
    if (!targets.large_block_ids.empty()) {
        int best = targets.large_block_ids.front();
        for (int bi : targets.large_block_ids)
            if (blocks[bi].vertices < blocks[best].vertices) best = bi;
        const auto& b = blocks[best];
        return target_from_region(emb, ReplacementTarget::Kind::LargeBlock, b.edges, b.faces, *b.boundary_cycle,
                                  b.vertices);
    }
    return std::nullopt;
}

TriangulatedBlock triangulate_block(const Embedding& emb, const ReplacementTarget& tgt) {
    if (tgt.kind == ReplacementTarget::Kind::TrivialEdge)
        throw std::invalid_argument("trivial-edge targets have no cycle region");
    if (tgt.boundary_cycle.size() < 3) throw std::invalid_argument("boundary is not a single cycle");
    TriangulatedBlock t;
    t.c = static_cast<int>(tgt.boundary_cycle.size());
    t.v_t = static_cast<int>(tgt.boundary_cycle.size() + tgt.interior_vertices.size());
    std::set<EdgeV> have(tgt.region_edges.begin(), tgt.region_edges.end());

    for (int f : tgt.interior_faces) {
        std::vector<int> walk = emb.faces()[f].walk();
        // Fan from some vertex of the face whose chords are all fresh; fall
        // back to ear cutting if no single center works.
        int L = static_cast<int>(walk.size());
        if (L <= 3) continue;
        bool done = false;
        for (int s = 0; s < L && !done; ++s) {
            bool ok = true;
            for (int k = 2; k < L - 1; ++k)
                if (have.count(mk_edge(walk[s], walk[(s + k) % L]))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int k = 2; k < L - 1; ++k) {
                EdgeV ch = mk_edge(walk[s], walk[(s + k) % L]);
                have.insert(ch);
                t.chords.push_back(ch);
            }
            done = true;
        }
        if (!done) {
            std::vector<int> poly = walk;
            while (poly.size() > 3) {
                bool cut = false;
                for (size_t i = 0; i < poly.size(); ++i) {
                    int a = poly[i], c2 = poly[(i + 2) % poly.size()];
                    if (!have.count(mk_edge(a, c2))) {
                        EdgeV ch = mk_edge(a, c2);
                        have.insert(ch);
                        t.chords.push_back(ch);
                        poly.erase(poly.begin() + (i + 1) % poly.size());
                        cut = true;
                        break;
                    }
                }
                if (!cut) throw std::invalid_argument("region face cannot be triangulated without parallel edges");
            }
        }
    }
    t.e_t = static_cast<int>(tgt.region_edges.size() + t.chords.size());
    if (t.e_t != 3 * t.v_t - 3 - t.c)
        throw std::logic_error("triangulated region violates e = 3v - 3 - c");
    return t;
}

namespace {

struct GadgetIds {
    std::array<int, 3> c;  // outer corners, cyclic
    std::array<int, 3> i;  // inner, i[t] opposite c[t]
};

void append_t3_faces(std::vector<std::vector<int>>& walks, const GadgetIds& g) {
    const auto& c = g.c;
    const auto& i = g.i;
    walks.push_back({c[0], c[1], i[2]});
    walks.push_back({c[1], c[2], i[0]});
    walks.push_back({c[2], c[0], i[1]});
    walks.push_back({i[0], i[1], i[2]});
    walks.push_back({c[0], i[2], i[1]});
    walks.push_back({c[1], i[0], i[2]});
    walks.push_back({c[2], i[1], i[0]});
}

std::string case_name(int c) { return "C" + std::to_string(c); }

}  // namespace

std::string LedgerRecord::to_line() const {
    std::ostringstream os;
    os << case_id << " " << delta_v << " " << delta_e << " ";
    if (delta_v > 0) {
        os << rat_str(Rat(delta_e, delta_v)) << " " << (strict ? ">" : "=") << " 18/7";
    } else {
        os << "-"
           << " " << (delta_e >= 0 ? "ok" : "FAIL") << " 18/7";
    }
    return os.str();
}

std::pair<Embedding, LedgerRecord> apply_replacement(const Embedding& emb, const ReplacementTarget& tgt) {
    const Graph& g = emb.graph();
    int n = g.order();
    LedgerRecord rec;
    std::vector<std::vector<int>> walks;
    int next_id = n;

    if (tgt.kind == ReplacementTarget::Kind::TrivialEdge) {
        auto [v1, v2] = tgt.edge;
        auto [fa, fb] = emb.faces_of_edge(v1, v2);
        if (emb.faces()[fa].length() < 8 || emb.faces()[fb].length() < 8)
            throw std::invalid_argument("target stale: edge no longer borders two (8+)-faces");
        int host = std::min(fa, fb);  // the gadget goes into this face
        GadgetIds gd{{v1, v2, next_id}, {next_id + 1, next_id + 2, next_id + 3}};
        next_id += 4;
        for (int f = 0; f < emb.face_count(); ++f) {
            if (f == host) {
                std::vector<int> w;
                for (auto [x, y] : emb.faces()[f].darts) {
                    w.push_back(x);
                    if (mk_edge(x, y) == mk_edge(v1, v2)) w.push_back(gd.c[2]);
                }
                walks.push_back(std::move(w));
            } else {
                walks.push_back(emb.faces()[f].walk());
            }
        }
        append_t3_faces(walks, gd);
        rec.case_id = "K2";
        rec.delta_v = 4;
        rec.delta_e = 11;
    } else {
        TriangulatedBlock tb = triangulate_block(emb, tgt);
        int c = tb.c;
        if (c < 3 || c > 6) throw std::invalid_argument("boundary cycle length outside 3..6");
        const auto& b = tgt.boundary_cycle;
        std::vector<GadgetIds> gadgets;
        auto fresh3 = [&]() {
            std::array<int, 3> a{next_id, next_id + 1, next_id + 2};
            next_id += 3;
            return a;
        };
        // Arc over each boundary edge (b_i, b_{i+1}): the outer path of the
        // gadget assembly replacing it, or the re-added edge itself.
        std::vector<std::vector<int>> arcs(c);
        if (c == 3) {
            gadgets.push_back({{b[0], b[1], b[2]}, fresh3()});
            arcs[0] = {b[0], b[1]};
            arcs[1] = {b[1], b[2]};
            arcs[2] = {b[2], b[0]};
        } else if (c == 4) {
            int a = next_id++;
            gadgets.push_back({{b[0], b[1], a}, fresh3()});
            gadgets.push_back({{b[2], b[3], a}, fresh3()});
            arcs[0] = {b[0], b[1]};
            arcs[1] = {b[1], a, b[2]};
            arcs[2] = {b[2], b[3]};
            arcs[3] = {b[3], a, b[0]};
        } else if (c == 5) {
            int a1 = next_id++, a2 = next_id++;
            gadgets.push_back({{b[1], a1, b[2]}, fresh3()});
            gadgets.push_back({{b[4], b[0], a2}, fresh3()});
            gadgets.push_back({{a1, a2, b[3]}, fresh3()});
            arcs[0] = {b[0], a2, a1, b[1]};
            arcs[1] = {b[1], b[2]};
            arcs[2] = {b[2], a1, b[3]};
            arcs[3] = {b[3], a2, b[4]};
            arcs[4] = {b[4], b[0]};
        } else {
            int a1 = next_id++, a2 = next_id++, a3 = next_id++;
            gadgets.push_back({{a3, b[1], b[2]}, fresh3()});
            gadgets.push_back({{a3, a2, b[0]}, fresh3()});
            gadgets.push_back({{a1, a2, b[5]}, fresh3()});
            gadgets.push_back({{a1, b[3], b[4]}, fresh3()});
            arcs[0] = {b[0], a3, b[1]};
            arcs[1] = {b[1], b[2]};
            arcs[2] = {b[2], a3, a2, a1, b[3]};
            arcs[3] = {b[3], b[4]};
            arcs[4] = {b[4], a1, b[5]};
            arcs[5] = {b[5], a2, b[0]};
        }
        std::map<EdgeV, std::vector<int>> arc_of;
        for (int i = 0; i < c; ++i) arc_of[mk_edge(b[i], b[(i + 1) % c])] = arcs[i];
        std::set<EdgeV> region(tgt.region_edges.begin(), tgt.region_edges.end());
        std::set<int> drop(tgt.interior_faces.begin(), tgt.interior_faces.end());
        for (int f = 0; f < emb.face_count(); ++f) {
            if (drop.count(f)) continue;
            std::vector<int> w;
            for (auto [x, y] : emb.faces()[f].darts) {
                w.push_back(x);
                auto it = arc_of.find(mk_edge(x, y));
                if (it != arc_of.end() && it->second.size() > 2) {
                    const auto& arc = it->second;
                    if (arc.front() == x)
                        w.insert(w.end(), arc.begin() + 1, arc.end() - 1);
                    else
                        w.insert(w.end(), arc.rbegin() + 1, arc.rend() - 1);
                } else if (region.count(mk_edge(x, y)) && it == arc_of.end()) {
                    throw std::invalid_argument("target stale: kept face crosses a region-interior edge");
                }
            }
            walks.push_back(std::move(w));
        }
        for (const auto& gd : gadgets) append_t3_faces(walks, gd);
        rec.case_id = case_name(c);
        rec.v_prime = tb.v_t;
        rec.e_prime = tb.e_t;
        static const std::map<int, std::pair<int, int>> totals{{3, {6, 12}}, {4, {11, 24}}, {5, {16, 36}}, {6, {21, 48}}};
        rec.delta_v = totals.at(c).first - tb.v_t;
        rec.delta_e = totals.at(c).second - tb.e_t;
    }

    // Compact ids: interior vertices vanish, gadget vertices are appended.
    std::set<int> deleted(tgt.interior_vertices.begin(), tgt.interior_vertices.end());
    std::vector<int> remap(next_id, -1);
    int nn = 0;
    for (int v = 0; v < next_id; ++v)
        if (!deleted.count(v)) remap[v] = nn++;
    for (auto& w : walks)
        for (auto& v : w) {
            if (remap[v] == -1) throw std::logic_error("kept face references a deleted vertex");
            v = remap[v];
        }
    int outer_walk = -1;
    {
        // The outer face survives every replacement: regions are interior.
        int idx = 0;
        for (int f = 0; f < emb.face_count(); ++f) {
            bool dropped = tgt.kind != ReplacementTarget::Kind::TrivialEdge &&
                           std::find(tgt.interior_faces.begin(), tgt.interior_faces.end(), f) !=
                               tgt.interior_faces.end();
            if (dropped) continue;
            if (f == emb.outer_face()) outer_walk = idx;
            ++idx;
        }
    }
    Embedding out = Embedding::from_faces(nn, walks,
                                          outer_walk >= 0 ? std::optional<int>(outer_walk) : std::nullopt);
    if (!euler_check(out)) throw std::logic_error("replacement output fails Euler check");

    rec.measured_delta_e = out.graph().size() - g.size();
    int measured_dv = out.graph().order() - g.order();
    if (measured_dv != rec.delta_v) throw std::logic_error("measured vertex delta disagrees with the case formula");
    if (rec.measured_delta_e < rec.delta_e) throw std::logic_error("measured edge delta below the case formula");
    if (rec.delta_v > 0) {
        Rat ratio(rec.delta_e, rec.delta_v);
        rec.strict = ratio > Rat(18, 7);
        rec.ratio_ok = ratio >= Rat(18, 7);
    } else {
        rec.strict = false;
        rec.ratio_ok = rec.delta_e >= 0;
    }
    return {std::move(out), rec};
}

NormalizeResult normalize(const Embedding& emb) {
    PreconditionReport pre = validate_preconditions(emb.graph());
    if (!pre.is_two_connected) throw std::invalid_argument("normalize: input not 2-connected");
    if (pre.min_degree < 3) throw std::invalid_argument("normalize: min degree < 3");
    if (pre.min_adjacent_degree_sum < 7) throw std::invalid_argument("normalize: adjacent degree sum < 7");
    if (emb.graph().order() < 8) throw std::invalid_argument("normalize: fewer than 8 vertices");
    if (find_cycle(emb.graph(), 7)) throw std::invalid_argument("normalize: input contains a 7-cycle");

    NormalizeResult res{emb, {}};
    auto count_targets = [](const Embedding& e) {
        auto blocks = partition_blocks(e);
        auto sbs = small_block_sets(e, blocks);
        auto t = normalization_targets(e, blocks, sbs);
        return t.trivial_edges.size() + t.small_set_ids.size() + t.large_block_ids.size();
    };
    size_t remaining = count_targets(res.emb);
    int guard = emb.graph().size() + static_cast<int>(remaining) + 1;
    while (true) {
        auto tgt = find_target(res.emb);
        if (!tgt) break;
        if (--guard < 0) throw std::logic_error("normalize: step guard exceeded");
        auto [next, rec] = apply_replacement(res.emb, *tgt);
        res.ledger.push_back(rec);
        res.emb = std::move(next);
        size_t now = count_targets(res.emb);
        if (now >= remaining) throw std::logic_error("normalize: target count failed to decrease");
        remaining = now;
    }
    PreconditionReport post = validate_preconditions(res.emb.graph());
    if (!post.is_two_connected || post.min_degree < 3 || post.min_adjacent_degree_sum < 7)
        throw std::logic_error("normalize output violates the structural preconditions");
    if (res.emb.graph().order() < emb.graph().order())
        throw std::logic_error("normalize output lost vertices");
    return res;
}

}  // namespace planar7
