#pragma once

#include <string>
#include <vector>

#include "planar7/graph.hpp"
#include "planar7/rational.hpp"

namespace planar7 {

// Peeling: repeatedly delete a vertex of degree <= 2, else an adjacent pair
// with degree sum <= 6, lowest ids first. Every step satisfies
// 18 v_d - 7 e_d >= 0.5 v_d exactly.
struct PeelStep {
    enum class Kind { DeleteLowDegree, DeleteLightPair } kind;
    std::vector<int> deleted;  // original vertex ids
    int v_d = 0;
    int e_d = 0;
};

struct PeelTrace {
    std::vector<PeelStep> steps;
    Graph final_graph;
    std::vector<int> final_ids;  // original id per final vertex
    std::string to_text() const;
};

PeelTrace peel(const Graph& g);

// Fixed per-size minima of 18n - 7e - 18 over admissible blocks.
int block_floor(int block_size);  // sizes 2..7 from the table, >= 8 gives 30

// Sum of block_floor over the biconnected blocks plus 18 per connected
// component: a lower bound for 18 v - 7 e on peeled graphs.
Rat block_lower_bound(const Graph& g);

struct TheoremBoundReport {
    long long value = 0;  // 18n - 7e
    bool planar = false;
    bool c7_free = false;
    bool applicable = false;  // n >= 60 and hypotheses hold
    bool pass = true;         // value >= 48 when applicable
    bool alarm = false;       // applicable and value < 48: a counterexample
    std::string to_text() const;
};

// Computes 18n - 7e and, for planar C7-free graphs with n >= 60, checks the
// >= 48 bound. A violation is a counterexample alarm: the caller must persist
// the witness graph.
TheoremBoundReport theorem_bound_check(const Graph& g);

}  // namespace planar7
