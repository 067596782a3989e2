#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar7/graph.hpp"

namespace planar7 {

struct SearchResult {
    int n = 0;
    int k = 0;
    int max_edges = 0;
    Graph witness;
    long long count_extremal = 0;  // isomorphism classes attaining the maximum
    std::string to_text() const;
};

// Exact maximum edge count of a planar C_k-free graph on n vertices.
// Labeled edge-subset enumeration (top-down by edge count) for n <= 7;
// vertex-by-vertex generation with canonical-form deduplication at n = 8.
// jobs > 1 splits the n <= 7 enumeration across threads; results are
// independent of the worker count.
SearchResult exhaustive_ex_p(int n, int k, int jobs = 1);

struct TriangulationScan {
    long long triangulations = 0;       // labeled planar graphs on 7 vertices, 15 edges
    long long containing_c7 = 0;
    std::vector<Graph> counterexamples;  // empty iff every one contains a 7-cycle
    bool all_contain() const { return triangulations > 0 && counterexamples.empty(); }
};

// Every planar triangulation on 7 vertices contains a 7-cycle.
TriangulationScan triangulation_c7_scan();

// Canonical form of a graph on at most 8 vertices: the lexicographically
// greatest upper-triangle bit string over all vertex orderings.
uint32_t canonical_certificate(const Graph& g);

}  // namespace planar7
