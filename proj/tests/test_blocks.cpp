#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "planar7/blocks.hpp"
#include "planar7/extremal.hpp"

using namespace planar7;

namespace {

// Sum of f* over all edges equals #faces of length <= 8 plus sum of l/8 over
// longer faces; exact on every 2-connected embedding.
void check_fstar_identity(const Embedding& emb) {
    Rat total(0);
    for (auto [u, v] : emb.graph().edges()) total += f_star(emb, u, v);
    Rat expect(0);
    for (const auto& f : emb.faces())
        expect += f.length() <= 8 ? Rat(1) : Rat(f.length(), 8);
    CHECK(total == expect);
}

}  // namespace

TEST_CASE("f_star values") {
    Embedding th = corpus::theta();
    CHECK(f_star(th, 0, 7) == Rat(1, 4));  // chord between two 8-faces

    auto ex = expand_to_g(build_g0(2));
    // Every gadget has inner edges between two 3-faces and boundary edges
    // between a 3-face and an (8+)-face.
    bool saw_23 = false, saw_11_24 = false;
    for (auto [u, v] : ex.emb.graph().edges()) {
        Rat f = f_star(ex.emb, u, v);
        if (f == Rat(2, 3)) saw_23 = true;
        if (f == Rat(1, 3) + Rat(1, 8)) saw_11_24 = true;
        CHECK(Rat(1, 4) <= f);
        CHECK(f <= Rat(2, 3));
    }
    CHECK(saw_23);
    CHECK(saw_11_24);
}

TEST_CASE("f_star rejects bridges") {
    Embedding path = Embedding::from_faces(3, {{0, 1, 2, 1}});
    CHECK_THROWS(f_star(path, 0, 1));
}

TEST_CASE("f_star aggregation identity") {
    check_fstar_identity(corpus::theta());
    check_fstar_identity(corpus::cube());
    check_fstar_identity(corpus::icosahedron());
    check_fstar_identity(build_g0(3));
    check_fstar_identity(expand_to_g(build_g0(2)).emb);
}

TEST_CASE("partition: single T3 standalone") {
    Embedding oct = corpus::octahedron();
    auto blocks = partition_blocks(oct);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].edges.size() == 12);
    CHECK(blocks[0].faces.size() == 7);  // the outer face never joins
    CHECK(classify(blocks[0], oct) == BlockLabel::T3);
}

TEST_CASE("partition: tree gives all B2") {
    Embedding star = Embedding::from_faces(4, {{0, 1, 0, 2, 0, 3}});
    auto blocks = partition_blocks(star);
    CHECK(blocks.size() == 3);
    for (const auto& b : blocks) CHECK(classify(b, star) == BlockLabel::B2);
}

TEST_CASE("seed independence") {
    for (const Embedding& emb : {corpus::wheel_necklace(), corpus::b3_ring(), corpus::s2_swapped_expansion(2)}) {
        auto blocks = partition_blocks(emb);
        for (const auto& b : blocks)
            for (auto e : b.edges) {
                TriangularBlock grown = grow_block_from(emb, e);
                CHECK(grown.edges == b.edges);
                CHECK(grown.faces == b.faces);
            }
    }
}

TEST_CASE("classify catalog shapes") {
    // B3: the ringed triangle.
    Embedding b3 = corpus::b3_ring();
    auto blocks = partition_blocks(b3);
    int b3_count = 0, b2_count = 0;
    for (const auto& b : blocks) {
        BlockLabel l = classify(b, b3);
        if (l == BlockLabel::B3) ++b3_count;
        if (l == BlockLabel::B2) ++b2_count;
    }
    CHECK(b3_count == 1);
    CHECK(b2_count == 18);

    // B4b: K4 embedding.
    Embedding k4 = Embedding::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    auto kb = partition_blocks(k4);
    REQUIRE(kb.size() == 1);
    CHECK(classify(kb[0], k4) == BlockLabel::B4b);

    // B5c: the wheels of the necklace.
    Embedding neck = corpus::wheel_necklace();
    for (const auto& b : partition_blocks(neck)) CHECK(classify(b, neck) == BlockLabel::B5c);

    // B4a: two triangles sharing an edge inside a big host.
    Embedding b4a = Embedding::from_faces(
        12, {{0, 1, 2}, {0, 2, 3}, {2, 1, 4, 5, 6, 7, 8, 3}, {0, 3, 8, 9, 10, 11, 4, 1},
             {11, 10, 9, 8, 7, 6, 5, 4}});
    auto ab = partition_blocks(b4a);
    bool found_b4a = false;
    for (const auto& b : ab)
        if (b.edges.size() == 5) {
            CHECK(classify(b, b4a) == BlockLabel::B4a);
            found_b4a = true;
        }
    CHECK(found_b4a);
}

namespace {

// Five interior cells of the B5d shape: triangle (0,1,2) with inner path 3-4.
const std::vector<std::vector<int>> kB5dCells{{0, 3, 1}, {0, 2, 3}, {3, 2, 4}, {3, 4, 1}, {2, 4, 1}};

// Host with a long ring so every outer-triangle edge borders an (8+)-face.
std::vector<std::vector<int>> b5_host_walks() {
    std::vector<std::vector<int>> walks;
    walks.push_back({1, 0, 5, 6, 7, 8, 9, 10});
    walks.push_back({2, 1, 10, 11, 12, 13, 14, 15});
    walks.push_back({0, 2, 15, 16, 17, 18, 19, 5});
    std::vector<int> outer;
    for (int v = 19; v >= 5; --v) outer.push_back(v);
    walks.push_back(outer);
    return walks;
}

}  // namespace

TEST_CASE("B5d and B5e share edges but not faces") {
    auto walks_d = b5_host_walks();
    walks_d.insert(walks_d.end(), kB5dCells.begin(), kB5dCells.end());
    Embedding d_emb = Embedding::from_faces(20, walks_d);
    bool saw_d = false;
    for (const auto& b : partition_blocks(d_emb))
        if (b.edges.size() == 9) {
            CHECK(classify(b, d_emb) == BlockLabel::B5d);
            saw_d = true;
        }
    CHECK(saw_d);

    // Same edge set, but the cell (3,4,1) holds an inner triangle joined by
    // quads, so it is not a face of the block.
    auto walks_e = b5_host_walks();
    for (const auto& c : kB5dCells)
        if (!(c[0] == 3 && c[1] == 4 && c[2] == 1)) walks_e.push_back(c);
    walks_e.push_back({3, 20, 21, 4});
    walks_e.push_back({4, 21, 22, 1});
    walks_e.push_back({1, 22, 20, 3});
    walks_e.push_back({20, 22, 21});
    Embedding e_emb = Embedding::from_faces(23, walks_e);
    bool saw_e = false, saw_inner_b3 = false;
    for (const auto& b : partition_blocks(e_emb)) {
        if (b.edges.size() == 9) {
            CHECK(classify(b, e_emb) == BlockLabel::B5e);
            saw_e = true;
        }
        if (b.edges.size() == 3 && b.vertices[0] == 20) {
            CHECK(classify(b, e_emb) == BlockLabel::B3);
            saw_inner_b3 = true;
        }
    }
    CHECK(saw_e);
    CHECK(saw_inner_b3);
}

TEST_CASE("is_large") {
    Embedding oct = corpus::octahedron();
    auto ob = partition_blocks(oct);
    CHECK(is_large(ob[0]));  // the T3

    Embedding b3 = corpus::b3_ring();
    for (const auto& b : partition_blocks(b3)) CHECK(!is_large(b));

    Embedding neck = corpus::wheel_necklace();
    for (const auto& b : partition_blocks(neck)) CHECK(!is_large(b));

    // The skewed twelve-edge block is large but not a T3.
    Embedding skew = corpus::s2_swapped_expansion(2);
    int larges = 0, t3s = 0;
    for (const auto& b : partition_blocks(skew)) {
        BlockLabel l = classify(b, skew);
        if (l == BlockLabel::LARGE) ++larges;
        if (l == BlockLabel::T3) ++t3s;
        CHECK((l == BlockLabel::LARGE || l == BlockLabel::T3));
    }
    CHECK(larges == 1);
    CHECK(t3s == 22);
}

TEST_CASE("block metrics") {
    Embedding th = corpus::theta();
    auto tb = partition_blocks(th);
    for (const auto& b : tb) {
        auto m = block_metrics(b, th);
        CHECK(m.e_boundary_8plus == 1);
        CHECK(m.e_internal == 0);
        if (b.edges[0] == std::make_pair(0, 7)) CHECK(m.f_b == Rat(1, 4));
    }
    auto ex = expand_to_g(build_g0(2));
    for (const auto& b : partition_blocks(ex.emb)) {
        auto m = block_metrics(b, ex.emb);
        CHECK(m.e_boundary_8plus == 3);
        CHECK(m.e_internal == 9);
    }
}

TEST_CASE("small block sets: singleton B3") {
    Embedding emb = corpus::b3_ring();
    auto blocks = partition_blocks(emb);
    auto sbs = small_block_sets(emb, blocks);
    // The B3 forms a singleton set with one interior face; every ring edge is
    // its own singleton too.
    bool found = false;
    for (const auto& s : sbs.sets) {
        if (s.block_ids.size() != 1) continue;
        const auto& b = blocks[s.block_ids[0]];
        if (b.edges.size() == 3) {
            found = true;
            CHECK(s.captured_faces.empty());
            CHECK(s.interior_face_count == 1);
            REQUIRE(s.boundary_cycle.has_value());
            CHECK(s.boundary_cycle->size() == 3);
            auto m = block_metrics(b, emb);
            CHECK(m.e_boundary_8plus == 3);
            CHECK(m.e_internal == 0);
        }
    }
    CHECK(found);
    CHECK(sbs.seven_faces.empty());
}

TEST_CASE("small block sets: seven-face diagnostic") {
    Embedding emb = corpus::b3_seven_ring();
    auto sbs = small_block_sets(emb, partition_blocks(emb));
    CHECK(!sbs.seven_faces.empty());
}

TEST_CASE("small block sets: capture closure") {
    Embedding emb = corpus::two_b3_quad();
    auto blocks = partition_blocks(emb);
    auto sbs = small_block_sets(emb, blocks);
    // One set swallows both triangles, the two linking edges, the 4-face and
    // the 6-face outer region.
    REQUIRE(sbs.sets.size() == 1);
    const auto& s = sbs.sets[0];
    CHECK(s.block_ids.size() == 4);
    CHECK(s.captured_faces.size() == 2);
    CHECK(s.vertices.size() == 6);
}

TEST_CASE("normalization targets") {
    Embedding th = corpus::theta();
    auto tb = partition_blocks(th);
    auto ts = normalization_targets(th, tb, small_block_sets(th, tb));
    CHECK(ts.trivial_edges.size() == 15);  // every edge borders two (8+)-faces

    Embedding neck = corpus::wheel_necklace();
    auto nb = partition_blocks(neck);
    auto ns = normalization_targets(neck, nb, small_block_sets(neck, nb));
    CHECK(ns.trivial_edges.empty());
    CHECK(ns.small_set_ids.size() == 4);
    CHECK(ns.large_block_ids.empty());

    Embedding skew = corpus::s2_swapped_expansion(2);
    auto kb = partition_blocks(skew);
    auto ks = normalization_targets(skew, kb, small_block_sets(skew, kb));
    CHECK(ks.trivial_edges.empty());
    CHECK(ks.small_set_ids.empty());
    CHECK(ks.large_block_ids.size() == 1);

    auto g2 = expand_to_g(build_g0(2));
    auto gb = partition_blocks(g2.emb);
    auto gs = normalization_targets(g2.emb, gb, small_block_sets(g2.emb, gb));
    CHECK(gs.trivial_edges.empty());
    CHECK(gs.small_set_ids.empty());
    CHECK(gs.large_block_ids.empty());  // T3 is the fixed point
}

TEST_CASE("lemma 4.4 audit rows and gate") {
    // Applicable and trivially zero on the expansion.
    auto g2 = expand_to_g(build_g0(2));
    auto rep = audit_small_block_inequality(g2.emb);
    CHECK(rep.applicable);
    CHECK(rep.holds);
    CHECK(rep.lhs == Rat(0));

    // Capped cylinder: all-B2 blocks, 1/2 <= 11/18 per edge.
    Embedding cyl = corpus::capped_cylinder(8, 2);
    auto crep = audit_small_block_inequality(cyl);
    CHECK(crep.applicable);
    CHECK(crep.holds);
    CHECK(crep.lhs == Rat(cyl.graph().size(), 2));
    CHECK(crep.rhs == Rat(11, 18) * cyl.graph().size());

    // Theta graph: the B2 row shows 1/4 <= 41/72 even though the host fails
    // the hypotheses (degree 2, trivial edges everywhere).
    auto trep = audit_small_block_inequality(corpus::theta());
    CHECK(!trep.applicable);
    REQUIRE(!trep.findings.empty());
    CHECK(trep.findings[0].pass);

    // Negative controls: flagged inapplicable, not failing.
    CHECK(!audit_small_block_inequality(corpus::icosahedron()).applicable);   // C7
    CHECK(!audit_small_block_inequality(corpus::octahedron()).applicable);    // n < 8
    CHECK(!audit_small_block_inequality(corpus::cube()).applicable);          // degree sums
    CHECK(!audit_small_block_inequality(corpus::wheel_necklace()).applicable);  // not normalized
}

TEST_CASE("lemma 4.4 B3 row value") {
    // A B3 with one interior edge (on a 4-face): f_B = 3/2; the bound row is
    // 2*(41/72) + 11/18 = 7/4.
    Embedding emb = Embedding::from_faces(14, {{0, 1, 2},
                                               {1, 0, 3, 4},
                                               {2, 1, 4, 5, 6, 7, 8, 9},
                                               {0, 2, 9, 10, 11, 12, 13, 3},
                                               {4, 3, 13, 12, 11, 10, 9, 8, 7, 6, 5}});
    auto blocks = partition_blocks(emb);
    bool found = false;
    for (const auto& b : blocks) {
        if (b.edges.size() != 3) continue;
        found = true;
        CHECK(classify(b, emb) == BlockLabel::B3);
        auto m = block_metrics(b, emb);
        CHECK(m.e_boundary_8plus == 2);
        CHECK(m.e_internal == 1);
        CHECK(m.f_b == Rat(3, 2));
        CHECK(Rat(41, 72) * m.e_boundary_8plus + Rat(11, 18) * m.e_internal == Rat(7, 4));
        CHECK(m.f_b <= Rat(7, 4));
    }
    CHECK(found);
}

TEST_CASE("lemma 4.5 audit") {
    auto cube_rep = audit_no_8face_inequality(corpus::cube());
    CHECK(cube_rep.applicable);
    CHECK(cube_rep.holds);
    CHECK(cube_rep.lhs == Rat(6));
    CHECK(cube_rep.rhs == Rat(27, 4));

    auto dode = audit_no_8face_inequality(corpus::dodecahedron());
    CHECK(dode.applicable);
    CHECK(dode.holds);

    auto hexp = audit_no_8face_inequality(corpus::hexagonal_prism());
    CHECK(hexp.applicable);
    CHECK(hexp.holds);

    // Icosahedron: contains C7 and would violate 9/16; a correct negative
    // control, inapplicable rather than failing.
    auto ico = audit_no_8face_inequality(corpus::icosahedron());
    CHECK(!ico.applicable);
    CHECK(!ico.holds);
    CHECK(ico.lhs == Rat(20));
    CHECK(ico.rhs == Rat(9, 16) * 30);

    // Octahedron: n < 7.
    CHECK(!audit_no_8face_inequality(corpus::octahedron()).applicable);

    // A single edge fails the minimum-degree hypothesis.
    Embedding b2 = Embedding::from_faces(2, {{0, 1}});
    CHECK(!audit_no_8face_inequality(b2).applicable);

    // The expansion has (8+)-faces: inapplicable for this audit.
    CHECK(!audit_no_8face_inequality(expand_to_g(build_g0(2)).emb).applicable);
}

TEST_CASE("report serialization is line oriented") {
    auto rep = audit_small_block_inequality(corpus::capped_cylinder(6, 1));
    std::string text = rep.to_text();
    CHECK(text.find("total") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
}
