#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "symsq/symsq.hpp"

using namespace symsq;

TEST_CASE("parity guard over Z, all small degrees") {
    REQUIRE_NOTHROW(check_parity<Int>(0));
    REQUIRE_THROWS_AS(check_parity<Int>(1), ParityError);
    REQUIRE_NOTHROW(check_parity<Int>(2));
    REQUIRE_THROWS_AS(check_parity<Int>(3), ParityError);
    for (int k = 0; k <= 3; ++k) REQUIRE_NOTHROW(check_parity<GF2>(k));
}

TEST_CASE("a single-term cycle squares to zero") {
    auto tri = build_complex({{0, 1, 2}});
    auto bd = Subcomplex::from_facets(tri, {{0, 1}, {1, 2}, {0, 2}});
    auto XA = relative_complex<Int>(tri, bd);
    auto P = ProductPair<Int>::build(tri, bd);
    auto Q = QuotientPair<Int>::build(P);
    Chain<Int> z = XA.chain_from_terms(2, {{Int(1), {0, 1, 2}}});
    REQUIRE(XA.is_relative_cycle(z));
    REQUIRE(sym_square_chain(XA, P, Q, z).empty());
}

TEST_CASE("two far-apart terms give a single orbit cell") {
    auto X = build_complex({{0, 1, 2}, {3, 4, 5}});
    auto A = Subcomplex::from_facets(
        X, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto XA = relative_complex<Int>(X, A);
    auto P = ProductPair<Int>::build(X, A);
    auto Q = QuotientPair<Int>::build(P);
    Chain<Int> z = XA.chain_from_terms(
        2, {{Int(1), {0, 1, 2}}, {Int(1), {3, 4, 5}}});
    REQUIRE(XA.is_relative_cycle(z));
    Chain<Int> s = sym_square_chain(XA, P, Q, z);
    REQUIRE(s.terms.size() == 1);
    REQUIRE(Q.C.is_cycle(s));
}

TEST_CASE("hexagon square over Z/2 generates the top homology") {
    auto hex = fx::hexagon();
    auto XA = complex_of<GF2>(hex);
    auto P = ProductPair<GF2>::build(hex, Subcomplex::empty(hex));
    auto Q = QuotientPair<GF2>::build(P);
    Chain<GF2> z = fx::hexagon_fc<GF2>(XA);
    Chain<GF2> s = sym_square_class(XA, P, Q, z);
    REQUIRE(s.terms.size() == 9);
    auto H2 = homology(Q.C, 2);
    REQUIRE(H2.betti == 1);
    REQUIRE_FALSE(H2.is_zero_class(s));
}

TEST_CASE("the output does not depend on the order of input terms") {
    auto hex = fx::hexagon();
    auto XA = complex_of<GF2>(hex);
    auto P = ProductPair<GF2>::build(hex, Subcomplex::empty(hex));
    auto Q = QuotientPair<GF2>::build(P);
    std::vector<std::pair<GF2, Simplex>> terms = {
        {GF2(1), {0, 1}}, {GF2(1), {1, 2}}, {GF2(1), {2, 3}},
        {GF2(1), {3, 4}}, {GF2(1), {4, 5}}, {GF2(1), {0, 5}}};
    Chain<GF2> ref = sym_square_chain(XA, P, Q,
                                      XA.chain_from_terms(1, terms));
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(terms.begin(), terms.end(), rng);
        Chain<GF2> s = sym_square_chain(XA, P, Q,
                                        XA.chain_from_terms(1, terms));
        REQUIRE(s == ref);
    }
}

TEST_CASE("term count bound and cycle property on random cycles") {
    auto oct = fx::octahedron();
    auto XA = complex_of<Int>(oct);
    auto P = ProductPair<Int>::build(oct, Subcomplex::empty(oct));
    auto Q = QuotientPair<Int>::build(P);
    auto H2 = homology(XA.C, 2);
    std::mt19937 rng(8);
    for (int t = 0; t < 10; ++t) {
        // random cycle: multiple of the fundamental class
        Chain<Int> z = H2.free_reps[0] * Int(1 + rng() % 3);
        size_t n = z.terms.size();
        Chain<Int> s = sym_square_class(XA, P, Q, z);
        REQUIRE(s.terms.size() <= n * (n - 1) / 2);
        REQUIRE(Q.C.is_cycle(s));
    }
}

TEST_CASE("non-cycles are rejected") {
    auto hex = fx::hexagon();
    auto XA = complex_of<GF2>(hex);
    auto P = ProductPair<GF2>::build(hex, Subcomplex::empty(hex));
    auto Q = QuotientPair<GF2>::build(P);
    Chain<GF2> notcycle(1);
    notcycle.add(0, GF2(1));
    REQUIRE_THROWS_AS(sym_square_chain(XA, P, Q, notcycle),
                      PreconditionError);
}

TEST_CASE("odd degree over Z is rejected") {
    auto hex = fx::hexagon();
    auto XA = complex_of<Int>(hex);
    auto P = ProductPair<Int>::build(hex, Subcomplex::empty(hex));
    auto Q = QuotientPair<Int>::build(P);
    REQUIRE_THROWS_AS(
        sym_square_chain(XA, P, Q, fx::hexagon_fc<Int>(XA)), ParityError);
}

TEST_CASE("half-square identity") {
    SECTION("octahedron over Z, level 0") {
        auto oct = fx::octahedron();
        DiagonalTower<Int> tower(oct, Subcomplex::empty(oct));
        auto rep = half_square_check(
            tower, 0, fx::octahedron_fc<Int>(tower.level(0).rel));
        REQUIRE(rep.result);
    }
    SECTION("hexagon over Z/2, level 0") {
        auto hex = fx::hexagon();
        DiagonalTower<GF2> tower(hex, Subcomplex::empty(hex));
        auto rep = half_square_check(
            tower, 0, fx::hexagon_fc<GF2>(tower.level(0).rel));
        REQUIRE(rep.result);
        REQUIRE(rep.projected_square_null);
    }
}

TEST_CASE("well-definedness under boundary perturbations") {
    auto cone = fx::octahedron_cone();
    auto C = complex_of<Int>(cone);
    Chain<Int> z = fx::octahedron_fc<Int>(C);
    REQUIRE(C.C.is_cycle(z));
    DiagonalTower<Int> tower(cone, Subcomplex::empty(cone));

    SECTION("trivial perturbation") {
        auto rep = well_definedness_check(tower, z, Chain<Int>(3), 0);
        REQUIRE(rep.result);
        REQUIRE(rep.first_level == 0);
    }
    SECTION("random 3-chain perturbations") {
        std::mt19937 rng(5);
        for (int t = 0; t < 20; ++t) {
            Chain<Int> w(3);
            for (int j = 0; j < C.C.size(3); ++j) {
                int r = static_cast<int>(rng() % 5);
                if (r < 2) w.add(j, Int(r == 0 ? 1 : -1));
            }
            auto rep = well_definedness_check(tower, z, w, 0);
            REQUIRE(rep.result);
            REQUIRE(rep.first_level == 0);
        }
    }
}

TEST_CASE("naturality") {
    auto hex = fx::hexagon();
    SECTION("rotation of the hexagon") {
        DiagonalTower<GF2> src(hex, Subcomplex::empty(hex));
        DiagonalTower<GF2> dst(hex, Subcomplex::empty(hex));
        std::map<int, int> rot;
        for (int v = 0; v < 6; ++v) rot[v] = (v + 1) % 6;
        SimplicialMap g(hex, hex, rot);
        auto rep = naturality_check(g, src, dst,
                                    fx::hexagon_fc<GF2>(src.level(0).rel), 0);
        REQUIRE(rep.result);
    }
    SECTION("double wrap onto the hollow triangle") {
        auto tri = fx::hollow_triangle();
        DiagonalTower<GF2> src(hex, Subcomplex::empty(hex));
        DiagonalTower<GF2> dst(tri, Subcomplex::empty(tri));
        std::map<int, int> wrap;
        for (int v = 0; v < 6; ++v) wrap[v] = v % 3;
        SimplicialMap g(hex, tri, wrap);
        auto rep = naturality_check(g, src, dst,
                                    fx::hexagon_fc<GF2>(src.level(0).rel), 0);
        REQUIRE(rep.result);
    }
}

TEST_CASE("fundamental class compatibility") {
    auto hex = fx::hexagon();
    SECTION("identity") {
        DiagonalTower<GF2> src(hex, Subcomplex::empty(hex));
        DiagonalTower<GF2> dst(hex, Subcomplex::empty(hex));
        std::map<int, int> id;
        for (int v = 0; v < 6; ++v) id[v] = v;
        auto rep = compat_check(SimplicialMap(hex, hex, id), src, dst, 0);
        REQUIRE(rep.result);
    }
    SECTION("double wrap") {
        auto tri = fx::hollow_triangle();
        DiagonalTower<GF2> src(hex, Subcomplex::empty(hex));
        DiagonalTower<GF2> dst(tri, Subcomplex::empty(tri));
        std::map<int, int> wrap;
        for (int v = 0; v < 6; ++v) wrap[v] = v % 3;
        auto rep = compat_check(SimplicialMap(hex, tri, wrap), src, dst, 0);
        REQUIRE(rep.result);
    }
}

TEST_CASE("fundamental square") {
    SECTION("hexagon over Z/2 passes at level 0") {
        auto hex = fx::hexagon();
        DiagonalTower<GF2> tower(hex, Subcomplex::empty(hex));
        auto rep = fundamental_square_check(tower, 0, 2);
        REQUIRE(rep.result);
        REQUIRE(rep.level == 0);
        REQUIRE_FALSE(rep.escalated);
    }
    SECTION("octahedron over Z escalates to level 1") {
        auto oct = fx::octahedron();
        DiagonalTower<Int> tower(oct, Subcomplex::empty(oct));
        auto rep = fundamental_square_check(tower, 0, 2);
        REQUIRE(rep.result);
        REQUIRE(rep.level == 1);
        REQUIRE(rep.escalated);
    }
    SECTION("non-pseudomanifolds are rejected") {
        auto wedge = build_complex({{0, 1, 2}, {2, 3, 4}});
        DiagonalTower<GF2> tower(wedge, Subcomplex::empty(wedge));
        REQUIRE_THROWS_AS(fundamental_square_check(tower, 0, 1),
                          StructureError);
    }
}

TEST_CASE("two disjoint hexagons square consistently") {
    auto two = build_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                              {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11},
                              {6, 11}});
    auto XA = complex_of<GF2>(two);
    auto P = ProductPair<GF2>::build(two, Subcomplex::empty(two));
    auto Q = QuotientPair<GF2>::build(P);
    std::vector<std::pair<GF2, Simplex>> terms;
    for (int b : {0, 6})
        for (int i = 0; i < 6; ++i)
            terms.push_back({GF2(1), {std::min(b + i, b + (i + 1) % 6),
                                      std::max(b + i, b + (i + 1) % 6)}});
    Chain<GF2> z = XA.chain_from_terms(1, terms);
    REQUIRE(XA.is_relative_cycle(z));
    Chain<GF2> s = sym_square_class(XA, P, Q, z);
    // two single-circle squares (9 cells each) plus the mixed block of
    // 36 edge-pair orbits between the two circles
    REQUIRE(s.terms.size() == 9 + 9 + 36);
    REQUIRE(Q.C.is_cycle(s));
}
