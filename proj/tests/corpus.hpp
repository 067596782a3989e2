#pragma once

// Hand-built embeddings shared by the block/transform/audit tests and the
// acceptance suite.

#include "planar7/embedding.hpp"

namespace planar7::corpus {

// 14-cycle with a chord: the chord is a single edge between two 8-faces.
Embedding theta();

// Triangle whose three exterior faces have length 8, closed by a 15-ring.
Embedding b3_ring();

// Variant with 12-ring: the triangle's exterior faces have length 7, which a
// 2-connected C7-free host cannot have.
Embedding b3_seven_ring();

// Two triangles joined through a 4-face by two linking edges.
Embedding two_b3_quad();

Embedding octahedron();     // graph-isomorphic to T3
Embedding icosahedron();    // contains C7: negative control
Embedding dodecahedron();   // C7-free, all faces length 5
Embedding cube();
Embedding hexagonal_prism();
Embedding pentagonal_prism();  // contains C7
Embedding antiprism(int m);

// Quadrangulated tube: rings of m vertices (m even), l+1 rings, both ends
// capped through a hub over alternating ring vertices. Bipartite, min degree
// 3, adjacent degree sums >= 7, every face a quad.
Embedding capped_cylinder(int m, int l);

// Ring of m 4-wheels sharing rim vertices; every wheel is a small block set
// on five vertices with a C4 boundary. C7-free for m = 4 (all wheel crossings
// have even length).
Embedding wheel_necklace(int m = 4);

// Expansion of build_g0(k) with one gadget rebuilt in a skewed twelve-edge
// shape: a large triangular block that is not a T3.
Embedding s2_swapped_expansion(int k = 2);

// Expansion of a ladder skeleton of `cells` octagonal cells: all blocks T3,
// with one long outer face.
Embedding strip_host(int cells);

// strip_host with one chord across the outer face: a single trivial edge.
Embedding strip_with_chord(int cells);

// strip_host with a pocket wired into the outer face by spoke edges:
//   'w': 4-wheel (5 vertices, C4 boundary)
//   '4': double wheel (6 vertices, C4 boundary)
//   '5': 5-wheel (6 vertices, C5 boundary)
//   '6': hexagonal ring of single edges (6 vertices, C6 boundary)
Embedding strip_with_pocket(int cells, char kind);

}  // namespace planar7::corpus

