#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar7/blocks.hpp"
#include "planar7/extremal.hpp"
#include "planar7/graph.hpp"

using namespace planar7;

TEST_CASE("skeleton invariants for k = 2..5") {
    for (int k = 2; k <= 5; ++k) {
        Embedding g0 = build_g0(k);
        CHECK(g0.graph().order() == 9 * k + 5);
        CHECK(g0.graph().size() == 12 * k + 4);
        CHECK(g0.face_count() == 3 * k + 1);
        for (const auto& f : g0.faces()) CHECK(f.length() == 8);
        CHECK(euler_check(g0));
    }
    CHECK_THROWS(build_g0(1));
}

TEST_CASE("expansion counting identities") {
    for (int k = 2; k <= 5; ++k) {
        auto ex = expand_to_g(build_g0(k));
        CHECK(ex.emb.graph().order() == 42 * k + 26);
        CHECK(ex.emb.graph().size() == 108 * k + 60);
        CHECK(7LL * ex.emb.graph().size() == 18LL * ex.emb.graph().order() - 48);
    }
}

TEST_CASE("expansion roles partition the vertices") {
    Embedding g0 = build_g0(2);
    auto ex = expand_to_g(g0);
    int mids = 0, corners = 0, inner = 0;
    for (auto r : ex.roles) {
        if (r == GadgetRole::Midpoint) ++mids;
        if (r == GadgetRole::Corner) ++corners;
        if (r == GadgetRole::Inner) ++inner;
    }
    CHECK(mids == g0.graph().size());
    CHECK(corners == 3 * 2 + 7);        // one fresh corner per degree-2 vertex
    CHECK(inner == 3 * (9 * 2 + 5));    // three inner vertices per gadget
}

TEST_CASE("full certificate for k = 2 and 3") {
    for (int k : {2, 3}) {
        auto ex = expand_to_g(build_g0(k));
        auto c = verify_extremal(ex.emb);
        CHECK(c.n == 42 * k + 26);
        CHECK(c.m == 108 * k + 60);
        CHECK(c.c7_free);
        CHECK(c.k4_free);
        CHECK(c.planar);
        CHECK(c.tight);
        CHECK(c.n % 42 == 26);
    }
}

TEST_CASE("certificate flags computed, never assumed") {
    // K4: C7-free by pigeonhole, not K4-free, not tight.
    Embedding k4 = Embedding::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    auto c = verify_extremal(k4);
    CHECK(c.c7_free);
    CHECK(!c.k4_free);
    CHECK(!c.tight);

    // C7 cycle graph: contains C7.
    std::vector<std::vector<int>> walks{{0, 1, 2, 3, 4, 5, 6}, {6, 5, 4, 3, 2, 1, 0}};
    auto c7 = verify_extremal(Embedding::from_faces(7, walks));
    CHECK(!c7.c7_free);
}

TEST_CASE("block partition of the expansion is all T3") {
    for (int k : {2, 3}) {
        auto ex = expand_to_g(build_g0(k));
        auto blocks = partition_blocks(ex.emb);
        CHECK(static_cast<int>(blocks.size()) == 9 * k + 5);
        long long edge_sum = 0;
        for (const auto& b : blocks) {
            CHECK(classify(b, ex.emb) == BlockLabel::T3);
            CHECK(b.edges.size() == 12);
            CHECK(b.faces.size() == 7);
            edge_sum += static_cast<long long>(b.edges.size());
        }
        CHECK(edge_sum == ex.emb.graph().size());
    }
}

TEST_CASE("T3 incident faces of the expansion have length at least 8") {
    auto ex = expand_to_g(build_g0(2));
    auto report = check_t3_face_sizes(ex.emb);
    CHECK(report.holds);
    CHECK(report.hypothesis_violations.empty());
}

TEST_CASE("8plus-face incidence bound is tight on the expansion") {
    auto ex = expand_to_g(build_g0(2));
    auto report = check_8plus_t3_incidence(ex.emb);
    CHECK(report.holds);
    // Degree-2 gadget crossings make the bound sharp: faces of length 8 + c
    // carry exactly c two-edge T3 contacts.
    CHECK(report.lhs == report.rhs);
}
