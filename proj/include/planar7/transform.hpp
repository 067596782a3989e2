#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planar7/blocks.hpp"
#include "planar7/embedding.hpp"
#include "planar7/rational.hpp"

namespace planar7 {

// A structure the normalization rewrites into T3 gadgets: an edge between two
// (8+)-faces, a small block set on < 7 vertices whose boundary is one cycle,
// or a large triangular block. Blocks already shaped as T3 are the rewriting
// fixed point and are never selected.
struct ReplacementTarget {
    enum class Kind { TrivialEdge, SmallSet, LargeBlock };
    Kind kind;
    std::pair<int, int> edge{-1, -1};       // TrivialEdge
    std::vector<int> boundary_cycle;        // cycle cases; starts at min vertex
    std::vector<int> interior_vertices;     // vertices strictly inside the cycle
    std::vector<std::pair<int, int>> region_edges;  // all edges being removed
    std::vector<int> interior_faces;        // host faces interior to the region
};

// Region with its interior triangulated; only the counts feed the ledger.
struct TriangulatedBlock {
    int v_t = 0;  // vertices (triangulation adds none)
    int e_t = 0;  // edges after triangulation: 3*v_t - 3 - c
    int c = 0;    // boundary length
    std::vector<std::pair<int, int>> chords;  // edges the triangulation added
};

struct LedgerRecord {
    std::string case_id;      // K2, C3, C4, C5, C6
    int v_prime = 0;          // v(T') for cycle cases
    int e_prime = 0;          // e(T') for cycle cases
    int delta_v = 0;          // formula delta, equals the measured vertex delta
    int delta_e = 0;          // formula delta; measured edge delta may exceed it
    int measured_delta_e = 0;
    // delta_e/delta_v > 18/7 whenever delta_v > 0; delta_e >= 0 when delta_v = 0.
    bool ratio_ok = false;
    bool strict = false;  // whether the comparison above is strict
    std::string to_line() const;
};

// Highest-priority target, or nullopt when normalized: trivial edges first,
// then small sets, then large blocks; lowest ids within a class.
std::optional<ReplacementTarget> find_target(const Embedding& emb);

// Fan-triangulates the interior faces of a target region, skipping chords
// that already exist in the region. Verifies e(T') = 3 v(T') - 3 - c.
TriangulatedBlock triangulate_block(const Embedding& emb, const ReplacementTarget& tgt);

// One Lemma-4.2 rewriting step. The input embedding is untouched; the target
// must have been computed against exactly this embedding.
std::pair<Embedding, LedgerRecord> apply_replacement(const Embedding& emb, const ReplacementTarget& tgt);

struct NormalizeResult {
    Embedding emb;
    std::vector<LedgerRecord> ledger;
};

// Repeats find_target/apply_replacement to the fixed point. The input must
// satisfy the structural hypotheses (2-connected, C7-free, n >= 8, min degree
// 3, adjacent degree sums >= 7); violations throw.
NormalizeResult normalize(const Embedding& emb);

}  // namespace planar7
