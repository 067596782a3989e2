#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "planar7/extremal.hpp"
#include "planar7/transform.hpp"

using namespace planar7;

TEST_CASE("find_target priorities and determinism") {
    // Trivial edge first.
    Embedding th = corpus::theta();
    auto t = find_target(th);
    REQUIRE(t.has_value());
    CHECK(t->kind == ReplacementTarget::Kind::TrivialEdge);
    CHECK(t->edge == std::make_pair(0, 1));  // lowest edge

    // Small set when no trivial edge exists.
    Embedding neck = corpus::wheel_necklace();
    auto nt = find_target(neck);
    REQUIRE(nt.has_value());
    CHECK(nt->kind == ReplacementTarget::Kind::SmallSet);
    CHECK(nt->boundary_cycle.size() == 4);

    // Large non-T3 block.
    Embedding skew = corpus::s2_swapped_expansion(2);
    auto st = find_target(skew);
    REQUIRE(st.has_value());
    CHECK(st->kind == ReplacementTarget::Kind::LargeBlock);
    CHECK(st->boundary_cycle.size() == 3);

    // The all-T3 expansion is the fixed point.
    auto g2 = expand_to_g(build_g0(2));
    CHECK(!find_target(g2.emb).has_value());

    // Determinism.
    auto nt2 = find_target(neck);
    CHECK(nt->boundary_cycle == nt2->boundary_cycle);
}

TEST_CASE("triangulate_block examples") {
    // Bare triangle region (the ringed B3): v=3, c=3, e' = 3.
    Embedding b3 = corpus::b3_ring();
    ReplacementTarget bt;
    bt.kind = ReplacementTarget::Kind::SmallSet;
    bt.boundary_cycle = {0, 1, 2};
    bt.region_edges = {{0, 1}, {0, 2}, {1, 2}};
    auto [fa, fb] = b3.faces_of_edge(0, 1);
    bt.interior_faces = {b3.faces()[fa].length() == 3 ? fa : fb};
    auto tb3 = triangulate_block(b3, bt);
    CHECK(tb3.v_t == 3);
    CHECK(tb3.c == 3);
    CHECK(tb3.e_t == 3);
    CHECK(tb3.chords.empty());

    // Twelve-edge large block: v=6, c=3, e' = 12, already triangulated.
    Embedding skew = corpus::s2_swapped_expansion(2);
    auto st = find_target(skew);
    auto tskew = triangulate_block(skew, *st);
    CHECK(tskew.v_t == 6);
    CHECK(tskew.e_t == 12);
    CHECK(tskew.chords.empty());

    // Wheel: v=5, c=4, e' = 8.
    Embedding neck = corpus::wheel_necklace();
    auto nt = find_target(neck);
    auto tw = triangulate_block(neck, *nt);
    CHECK(tw.v_t == 5);
    CHECK(tw.c == 4);
    CHECK(tw.e_t == 8);
    CHECK(tw.chords.empty());
}

TEST_CASE("K2 replacement") {
    Embedding host = corpus::strip_with_chord(4);
    auto t = find_target(host);
    REQUIRE(t.has_value());
    REQUIRE(t->kind == ReplacementTarget::Kind::TrivialEdge);
    auto [out, rec] = apply_replacement(host, *t);
    CHECK(rec.case_id == "K2");
    CHECK(rec.delta_v == 4);
    CHECK(rec.delta_e == 11);
    CHECK(rec.measured_delta_e == 11);
    CHECK(rec.ratio_ok);
    CHECK(rec.strict);  // 11/4 > 18/7
    CHECK(out.graph().order() == host.graph().order() + 4);
    CHECK(euler_check(out));
}

TEST_CASE("C3 replacement is the exact fixed point at v(T') = 6") {
    Embedding skew = corpus::s2_swapped_expansion(2);
    auto t = find_target(skew);
    auto [out, rec] = apply_replacement(skew, *t);
    CHECK(rec.case_id == "C3");
    CHECK(rec.v_prime == 6);
    CHECK(rec.delta_v == 0);
    CHECK(rec.delta_e == 0);
    CHECK(rec.measured_delta_e == 0);
    CHECK(rec.ratio_ok);  // delta_e >= 0 when delta_v = 0
    CHECK(out.graph().order() == skew.graph().order());
    CHECK(out.graph().size() == skew.graph().size());
    // The output is a fixed point: every block a T3.
    CHECK(!find_target(out).has_value());
}

TEST_CASE("C4 replacement on a wheel") {
    Embedding neck = corpus::wheel_necklace();
    auto t = find_target(neck);
    auto [out, rec] = apply_replacement(neck, *t);
    CHECK(rec.case_id == "C4");
    CHECK(rec.v_prime == 5);
    CHECK(rec.delta_v == 6);
    CHECK(rec.delta_e == 16);
    CHECK(Rat(rec.delta_e, rec.delta_v) > Rat(18, 7));
    CHECK(euler_check(out));
}

TEST_CASE("normalize the wheel necklace") {
    Embedding neck = corpus::wheel_necklace();
    auto res = normalize(neck);
    CHECK(res.ledger.size() == 4);
    for (const auto& rec : res.ledger) {
        CHECK(rec.case_id == "C4");
        CHECK(rec.ratio_ok);
        CHECK(rec.strict);
    }
    CHECK(!find_target(res.emb).has_value());
    auto pre = validate_preconditions(res.emb.graph());
    CHECK(pre.is_two_connected);
    CHECK(pre.min_degree >= 3);
    CHECK(pre.min_adjacent_degree_sum >= 7);
    CHECK(res.emb.graph().order() == 16 + 4 * 6);
}

TEST_CASE("normalize with a single trivial edge gives one K2 record") {
    Embedding host = corpus::strip_with_chord(4);
    auto res = normalize(host);
    REQUIRE(res.ledger.size() == 1);
    CHECK(res.ledger[0].case_id == "K2");
    CHECK(res.ledger[0].to_line() == "K2 4 11 11/4 > 18/7");
}

TEST_CASE("normalize already-normalized input is a no-op") {
    auto g2 = expand_to_g(build_g0(2));
    auto res = normalize(g2.emb);
    CHECK(res.ledger.empty());
    CHECK(res.emb.graph() == g2.emb.graph());
}

TEST_CASE("normalize pocket hosts: spokes then pocket") {
    struct Case {
        int cells;
        char kind;
        std::string cycle_case;
        int v_prime, dv, de;
    };
    for (const Case& c : {Case{8, 'w', "C4", 5, 6, 16}, Case{8, '4', "C4", 6, 5, 13},
                          Case{9, '5', "C5", 6, 10, 26}, Case{17, '6', "C6", 6, 15, 39}}) {
        CAPTURE(c.kind);
        Embedding host = corpus::strip_with_pocket(c.cells, c.kind);
        auto res = normalize(host);
        int k2 = 0, cyc = 0;
        for (const auto& rec : res.ledger) {
            CHECK(rec.ratio_ok);
            if (rec.case_id == "K2") {
                ++k2;
                CHECK(rec.delta_v == 4);
                CHECK(rec.delta_e == 11);
            } else {
                ++cyc;
                CHECK(rec.case_id == c.cycle_case);
                CHECK(rec.v_prime == c.v_prime);
                CHECK(rec.delta_v == c.dv);
                CHECK(rec.delta_e == c.de);
            }
        }
        CHECK(cyc == 1);
        CHECK(k2 >= 4);  // one per spoke
        auto pre = validate_preconditions(res.emb.graph());
        CHECK(pre.is_two_connected);
        CHECK(pre.min_degree >= 3);
        CHECK(pre.min_adjacent_degree_sum >= 7);
        CHECK(!find_target(res.emb).has_value());
    }
}

TEST_CASE("normalize rejects hypothesis violations") {
    CHECK_THROWS(normalize(corpus::theta()));        // min degree 2
    CHECK_THROWS(normalize(corpus::icosahedron()));  // contains C7
    CHECK_THROWS(normalize(corpus::octahedron()));   // fewer than 8 vertices
}

TEST_CASE("ledger line format") {
    LedgerRecord rec;
    rec.case_id = "C4";
    rec.delta_v = 5;
    rec.delta_e = 13;
    rec.strict = true;
    CHECK(rec.to_line() == "C4 5 13 13/5 > 18/7");
    LedgerRecord zero;
    zero.case_id = "C3";
    zero.delta_v = 0;
    zero.delta_e = 0;
    CHECK(zero.to_line() == "C3 0 0 - ok 18/7");
}
