#include "planar7/reduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "planar7/planarity.hpp"

namespace planar7 {

std::string PeelTrace::to_text() const {
    std::ostringstream os;
    for (const auto& s : steps)
        os << (s.kind == PeelStep::Kind::DeleteLowDegree ? "LOW" : "PAIR") << " " << s.v_d << " " << s.e_d
           << "\n";
    os << final_graph.order() << " " << final_graph.size() << "\n";
    return os.str();
}

namespace {

Graph rebuild_without(const Graph& g, const std::vector<int>& drop, std::vector<int>& ids) {
    std::vector<char> gone(g.order(), 0);
    for (int v : drop) gone[v] = 1;
    std::vector<int> remap(g.order(), -1);
    std::vector<int> next_ids;
    int nn = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) {
            remap[v] = nn++;
            next_ids.push_back(ids[v]);
        }
    Graph h(nn);
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) h.add_edge(remap[u], remap[v]);
    ids = next_ids;
    return h;
}

}  // namespace

PeelTrace peel(const Graph& g) {
    PeelTrace t;
    Graph cur = g;
    std::vector<int> ids(g.order());
    for (int v = 0; v < g.order(); ++v) ids[v] = v;
    while (true) {
        int low = -1;
        for (int v = 0; v < cur.order(); ++v)
            if (cur.degree(v) <= 2) {
                low = v;
                break;
            }
        if (low != -1) {
            PeelStep s;
            s.kind = PeelStep::Kind::DeleteLowDegree;
            s.deleted = {ids[low]};
            s.v_d = 1;
            s.e_d = cur.degree(low);
            cur = rebuild_without(cur, {low}, ids);
            if (5 * s.v_d < 2 * s.e_d) throw std::logic_error("peel step violates 18v-7e >= v/2");
            t.steps.push_back(std::move(s));
            continue;
        }
        std::pair<int, int> pick{-1, -1};
        for (auto [u, v] : cur.edges())
            if (cur.degree(u) + cur.degree(v) <= 6) {
                pick = {u, v};
                break;
            }
        if (pick.first == -1) break;
        PeelStep s;
        s.kind = PeelStep::Kind::DeleteLightPair;
        s.deleted = {ids[pick.first], ids[pick.second]};
        s.v_d = 2;
        // All edges at either endpoint, the shared edge once.
        s.e_d = cur.degree(pick.first) + cur.degree(pick.second) - 1;
        cur = rebuild_without(cur, {pick.first, pick.second}, ids);
        if (5 * s.v_d < 2 * s.e_d) throw std::logic_error("peel step violates 18v-7e >= v/2");
        t.steps.push_back(std::move(s));
    }
    t.final_graph = cur;
    t.final_ids = ids;
    return t;
}

int block_floor(int block_size) {
    switch (block_size) {
        case 2: return 11;
        case 3: return 15;
        case 4: return 12;
        case 5: return 9;
        case 6: return 6;
        case 7: return 10;
        default: return 30;  // size >= 8
    }
}

Rat block_lower_bound(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    Rat total(0);
    total += Rat(18) * component_count(g);  // the +18 term, per component
    for (const auto& b : biconnected_blocks(g)) total += block_floor(static_cast<int>(b.vertices.size()));
    return total;
}

std::string TheoremBoundReport::to_text() const {
    std::ostringstream os;
    os << "18n-7e = " << value << " planar=" << (planar ? "true" : "false")
       << " c7_free=" << (c7_free ? "true" : "false");
    if (!applicable)
        os << " inapplicable";
    else if (alarm)
        os << " ALARM: bound 48 violated";
    else
        os << " pass";
    os << "\n";
    return os.str();
}

TheoremBoundReport theorem_bound_check(const Graph& g) {
    TheoremBoundReport r;
    r.value = 18LL * g.order() - 7LL * g.size();
    r.planar = is_planar(g);
    r.c7_free = !find_cycle(g, 7).has_value();
    r.applicable = g.order() >= 60 && r.planar && r.c7_free;
    if (r.applicable) {
        r.pass = r.value >= 48;
        r.alarm = !r.pass;
    }
    return r;
}

}  // namespace planar7
