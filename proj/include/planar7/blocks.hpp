#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar7/embedding.hpp"
#include "planar7/rational.hpp"

namespace planar7 {

// Edge-and-face closure grown from a seed edge: every 3-face sharing an edge
// with the block is in it, and every edge of such a face is in it. The outer
// face never counts as a 3-face (it is the unbounded region), so a standalone
// octahedron decomposes as one block with seven faces.
struct TriangularBlock {
    std::vector<std::pair<int, int>> edges;  // (u,v) with u < v, sorted
    std::vector<int> faces;                  // host face ids of the block's 3-faces
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> boundary_edges;   // border a non-block face
    std::optional<std::vector<int>> boundary_cycle;    // when the boundary is a single cycle
};

enum class BlockLabel {
    B2, B3, B4a, B4b,
    B5a, B5b, B5c, B5d, B5e,
    B6a, B6b, B6c, B6d, B6e, B6f, B6g, B6h, B6i, B6j, B6k,
    B6l, B6m, B6n, B6o, B6p, B6q, B6r,
    T3, LARGE, OTHER,
};

std::string label_name(BlockLabel l);

std::vector<TriangularBlock> partition_blocks(const Embedding& emb);

// Grows the closure from one seed edge; equals the partition member that
// contains the seed (Observation (i)).
TriangularBlock grow_block_from(const Embedding& emb, std::pair<int, int> seed);

// Matches the (edge set, face set) pair against the catalog up to relabeling.
// Face sets matter: same-edge-set shapes with different face sets get
// different labels. Unmatched blocks fall back to LARGE or OTHER.
BlockLabel classify(const TriangularBlock& b, const Embedding& emb);

// Discharging weight max(1/l1,1/8) + max(1/l2,1/8) over the two faces at the
// edge. Requires the two faces to be distinct (no bridges).
Rat f_star(const Embedding& emb, int u, int v);

struct BlockMetrics {
    int e_boundary_8plus = 0;  // edges adjacent to some face of length >= 8
    int e_internal = 0;        // the rest
    Rat f_b{0};
};

BlockMetrics block_metrics(const TriangularBlock& b, const Embedding& emb);

// Boundary forms a single cycle and every pair of boundary-cycle vertices is
// joined inside the block by paths of every length 1..5, so that any external
// path of length 2..6 between them closes a 7-cycle. Interior vertices are
// fully surrounded by block faces and admit no external paths.
bool is_large(const TriangularBlock& b);

struct SmallBlockSet {
    std::vector<int> block_ids;       // members, indexes into the partition
    std::vector<int> captured_faces;  // exterior faces of length 4..6 absorbed
    std::vector<int> vertices;        // union over members, sorted
    int interior_face_count = 0;      // member 3-faces + captured faces
    std::optional<std::vector<int>> boundary_cycle;
    bool contains_large = false;      // closure reached a large block (anomaly)
};

struct SmallBlockSummary {
    int k1 = 0;   // sum of e_B^boundary over all small blocks
    int k2 = 0;   // sum of e_B^int over all small blocks
    int f_k = 0;  // faces interior to all small block sets
};

struct SmallBlocksResult {
    std::vector<SmallBlockSet> sets;
    SmallBlockSummary summary;
    std::vector<int> small_block_ids;  // all blocks with is_large == false
    std::vector<int> seven_faces;      // 7-faces met by the closure: C7 diagnostic
};

SmallBlocksResult small_block_sets(const Embedding& emb, const std::vector<TriangularBlock>& blocks);

// Structures Lemma-4.2 normalization removes. Empty everywhere == normalized.
struct NormalizationTargets {
    std::vector<std::pair<int, int>> trivial_edges;  // edges between two (8+)-faces
    std::vector<int> small_set_ids;                  // sets on < 7 vertices with single-cycle boundary
    std::vector<int> large_block_ids;                // large blocks not isomorphic to T3
};

NormalizationTargets normalization_targets(const Embedding& emb, const std::vector<TriangularBlock>& blocks,
                                           const SmallBlocksResult& sbs);

// ---- audit reports ----------------------------------------------------

struct AuditFinding {
    std::string subject;   // face/block id
    std::string quantity;  // measured value
    std::string bound;     // bound it is compared against
    bool pass = true;
};

struct AuditReport {
    std::string title;
    bool applicable = true;
    std::vector<std::string> hypothesis_violations;
    std::vector<AuditFinding> findings;
    Rat lhs{0}, rhs{0};
    bool holds = true;  // computed even when not applicable
    std::string to_text() const;
};

// Every face of length l >= 8 borders at most l-8 T3 blocks that share two
// edges with it; shared pairs must be consecutive along the face.
AuditReport check_8plus_t3_incidence(const Embedding& emb);

// Every face bordering a T3 has length >= 8 (exempting G == T3 itself).
AuditReport check_t3_face_sizes(const Embedding& emb);

// sum f_B <= 41/72 * sum e_B_boundary + 11/18 * sum e_B_int over small blocks.
AuditReport audit_small_block_inequality(const Embedding& emb);

// f(G) <= 9/16 e(G) when the embedding has no (8+)-face.
AuditReport audit_no_8face_inequality(const Embedding& emb);

// Dual over residual faces, T3 blocks and small block sets: one incidence per
// shared boundary edge; edges interior to a node are dropped.
DualGraph build_dual(const Embedding& emb, const std::vector<TriangularBlock>& blocks,
                     const SmallBlocksResult& sbs);

}  // namespace planar7
