#include "planar7/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "planar7/planarity.hpp"

namespace planar7 {

std::string SearchResult::to_text() const {
    std::ostringstream os;
    os << "n=" << n << " cycle=" << k << " max_edges=" << max_edges << " extremal_classes=" << count_extremal
       << "\n";
    return os.str();
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ps.emplace_back(u, v);
    return ps;
}

Graph from_mask(int n, const std::vector<std::pair<int, int>>& pairs, uint32_t mask) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

// Next k-subset bitmask in lexicographic order (Gosper's hack).
uint32_t next_subset(uint32_t x) {
    uint32_t c = x & -x, r = x + c;
    return ((r ^ x) >> 2) / c | r;
}

bool planar_and_ck_free(const Graph& g, int k) { return !find_cycle(g, k).has_value() && is_planar(g); }

struct CertSearch {
    const Graph& g;
    int n;
    std::vector<int> perm, used;
    std::vector<uint32_t> best_prefix;  // best bit prefix per placed count
    uint32_t best = 0;
    bool any = false;

    explicit CertSearch(const Graph& g_) : g(g_), n(g_.order()), used(g_.order(), 0) {}

    void rec(uint32_t bits, int nbits) {
        int placed = static_cast<int>(perm.size());
        if (placed == n) {
            if (!any || bits > best) best = bits;
            any = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint32_t nb = bits;
            for (int i = 0; i < placed; ++i) {
                nb <<= 1;
                nb |= g.has_edge(perm[i], v) ? 1u : 0u;
            }
            // Prune: a strictly smaller prefix can never beat the best.
            if (any) {
                uint32_t best_here = best >> (((n * (n - 1)) / 2) - (nbits + placed));
                if (nb < best_here) continue;
            }
            used[v] = 1;
            perm.push_back(v);
            rec(nb, nbits + placed);
            perm.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

uint32_t canonical_certificate(const Graph& g) {
    if (g.order() > 8) throw std::invalid_argument("canonical certificate limited to n <= 8");
    if (g.order() <= 1) return 0;
    CertSearch cs(g);
    cs.rec(0, 0);
    return cs.best;
}

namespace {

Graph graph_of_certificate(int n, uint32_t cert) {
    Graph g(n);
    int total = n * (n - 1) / 2;
    int bit = total;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            --bit;
            if (cert >> bit & 1) g.add_edge(j, i);
        }
    return g;
}

// All distinct planar C_k-free graphs on n vertices, by augmentation: both
// properties are hereditary under vertex deletion, so pruned levels stay
// complete.
std::vector<uint32_t> augmented_certificates(int n, int k) {
    std::set<uint32_t> level{0};  // the 1-vertex graph
    for (int sz = 2; sz <= n; ++sz) {
        std::set<uint32_t> next;
        for (uint32_t cert : level) {
            Graph base = graph_of_certificate(sz - 1, cert);
            for (uint32_t mask = 0; mask < (1u << (sz - 1)); ++mask) {
                Graph g(sz);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int v = 0; v < sz - 1; ++v)
                    if (mask >> v & 1) g.add_edge(v, sz - 1);
                if (sz >= 3 && g.size() > 3 * sz - 6) continue;
                if (!planar_and_ck_free(g, k)) continue;
                next.insert(canonical_certificate(g));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

}  // namespace

SearchResult exhaustive_ex_p(int n, int k, int jobs) {
    if (n < 3 || n > 8) throw std::invalid_argument("exhaustive search supports 3 <= n <= 8");
    if (k < 3) throw std::invalid_argument("cycle length must be >= 3");
    SearchResult res;
    res.n = n;
    res.k = k;

    if (n == 8) {
        int best = -1;
        std::set<uint32_t> extremal;
        Graph witness;
        for (uint32_t cert : augmented_certificates(n, k)) {
            Graph g = graph_of_certificate(n, cert);
            if (g.size() > best) {
                best = g.size();
                witness = g;
                extremal.clear();
            }
            if (g.size() == best) extremal.insert(cert);
        }
        res.max_edges = best;
        res.witness = witness;
        res.count_extremal = static_cast<long long>(extremal.size());
        return res;
    }

    auto pairs = all_pairs(n);
    int total = static_cast<int>(pairs.size());
    for (int e = std::min(total, 3 * n - 6); e >= 0; --e) {
        // All e-subsets of the edge slots, split across workers by rank.
        std::vector<uint32_t> masks;
        uint32_t m = (e == 0) ? 0 : (1u << e) - 1;
        if (e == 0) {
            masks.push_back(0);
        } else {
            uint32_t limit = 1u << total;
            for (uint32_t x = m; x < limit; x = next_subset(x)) {
                masks.push_back(x);
                if (x == (m << (total - e))) break;  // last subset
            }
        }
        int njobs = std::max(1, jobs);
        std::vector<std::vector<uint32_t>> hits(njobs);
        auto work = [&](int j) {
            for (size_t i = j; i < masks.size(); i += njobs) {
                Graph g = from_mask(n, pairs, masks[i]);
                if (planar_and_ck_free(g, k)) hits[j].push_back(masks[i]);
            }
        };
        if (njobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> ts;
            for (int j = 0; j < njobs; ++j) ts.emplace_back(work, j);
            for (auto& t : ts) t.join();
        }
        std::vector<uint32_t> all;
        for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
        if (all.empty()) continue;
        std::sort(all.begin(), all.end());
        std::set<uint32_t> classes;
        for (uint32_t x : all) classes.insert(canonical_certificate(from_mask(n, pairs, x)));
        res.max_edges = e;
        res.witness = from_mask(n, pairs, all.front());
        res.count_extremal = static_cast<long long>(classes.size());
        return res;
    }
    throw std::logic_error("unreachable: the empty graph always qualifies");
}

TriangulationScan triangulation_c7_scan() {
    TriangulationScan scan;
    const int n = 7, e = 15;
    auto pairs = all_pairs(n);
    int total = static_cast<int>(pairs.size());
    uint32_t m = (1u << e) - 1;
    uint32_t last = m << (total - e);
    for (uint32_t x = m;; x = next_subset(x)) {
        Graph g = from_mask(n, pairs, x);
        // A planar graph with e = 3n-6 is a triangulation, so min degree >= 3.
        if (g.min_degree() >= 3 && is_planar(g)) {
            ++scan.triangulations;
            if (find_cycle(g, 7))
                ++scan.containing_c7;
            else
                scan.counterexamples.push_back(g);
        }
        if (x == last) break;
    }
    return scan;
}

}  // namespace planar7
