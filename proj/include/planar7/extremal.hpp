#pragma once

#include <vector>

#include "planar7/embedding.hpp"

namespace planar7 {

// Hexagon-grid skeleton on 9k+5 vertices with 12k+4 edges: two rows of k
// octagonal cells, a column of closing cells routed around the left end, and
// an apex vertex on the innermost closing curve. Every face has length 8 and
// every degree is 2 or 3. Throws unless k >= 2.
Embedding build_g0(int k);

enum class GadgetRole { Midpoint, Corner, Inner };

struct Expansion {
    Embedding emb;
    std::vector<GadgetRole> roles;       // per vertex of the expanded graph
    std::vector<int> gadget_of;          // per vertex: a skeleton vertex whose
                                         // gadget introduced it (-1 for midpoints)
    std::vector<int> midpoint_of_edge;   // per skeleton edge index: midpoint id
};

// Replaces every skeleton vertex by a six-vertex triangular-block gadget and
// every skeleton edge by its shared midpoint vertex. Each skeleton vertex
// contributes 12 edges. Skeleton degrees must all be 2 or 3.
Expansion expand_skeleton(const Embedding& skeleton);

// expand_skeleton applied to build_g0(k), with the counting identities
// v = 42k+26, e = 108k+60 asserted.
Expansion expand_to_g(const Embedding& g0);

struct ExtremalCertificate {
    int n = 0;
    long long m = 0;
    bool c7_free = false;
    bool k4_free = false;
    bool planar = false;
    bool tight = false;  // 7m == 18n - 48 (requires n = 26 mod 42)
};

// All flags computed from the instance, never assumed.
ExtremalCertificate verify_extremal(const Embedding& emb);

}  // namespace planar7
