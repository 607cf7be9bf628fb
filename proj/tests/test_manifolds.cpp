#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "symsq/homology.hpp"
#include "symsq/manifolds.hpp"

using namespace symsq;

TEST_CASE("pseudomanifold recognition") {
    SECTION("octahedron: closed pseudomanifold") {
        auto rep = analyze(fx::octahedron());
        REQUIRE(rep.pure);
        REQUIRE(rep.ridge_ok);
        REQUIRE(rep.strongly_connected);
        REQUIRE(rep.boundary.is_empty());
        REQUIRE(rep.is_pseudomanifold());
    }
    SECTION("solid triangle: boundary is the three edges") {
        auto tri = build_complex({{0, 1, 2}});
        auto rep = analyze(tri);
        REQUIRE(rep.is_pseudomanifold());
        REQUIRE(rep.boundary.size(1) == 3);
        REQUIRE(rep.boundary.size(0) == 3);
    }
    SECTION("two triangles sharing a vertex: not strongly connected") {
        auto wedge = build_complex({{0, 1, 2}, {2, 3, 4}});
        auto rep = analyze(wedge);
        REQUIRE(rep.pure);
        REQUIRE(rep.ridge_ok);
        REQUIRE_FALSE(rep.strongly_connected);
    }
    SECTION("impure complex") {
        auto k = build_complex({{0, 1, 2}, {3, 4}});
        REQUIRE_FALSE(analyze(k).pure);
    }
    SECTION("three triangles around an edge: ridge condition fails") {
        auto book = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
        REQUIRE_FALSE(analyze(book).ridge_ok);
    }
}

TEST_CASE("orientations") {
    SECTION("hexagon and octahedron are orientable") {
        for (const SimplicialComplex& K : {fx::hexagon(), fx::octahedron()}) {
            auto o = orient(K);
            REQUIRE(o.orientable);
            for (int s : o.signs) REQUIRE((s == 1 || s == -1));
        }
    }
    SECTION("projective plane is not orientable; witness is a cycle") {
        auto rp2 = fx::rp2();
        auto o = orient(rp2);
        REQUIRE_FALSE(o.orientable);
        REQUIRE(o.witness.size() >= 2);
        for (int j : o.witness) {
            REQUIRE(j >= 0);
            REQUIRE(j < rp2.size(2));
        }
        // consecutive witness facets share a ridge
        for (size_t a = 0; a + 1 < o.witness.size(); ++a) {
            const Simplex& s = rp2.cell(2, o.witness[a]);
            const Simplex& t = rp2.cell(2, o.witness[a + 1]);
            std::vector<int> common;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(common));
            REQUIRE(common.size() == 2);
        }
    }
    SECTION("seed choice changes at most a global sign per component") {
        auto oct = fx::octahedron();
        auto base = orient(oct, 0);
        for (int seed = 1; seed < oct.size(2); ++seed) {
            auto o = orient(oct, seed);
            REQUIRE(o.orientable);
            int ratio = base.signs[0] * o.signs[0];
            for (int j = 0; j < oct.size(2); ++j)
                REQUIRE(base.signs[j] * o.signs[j] == ratio);
        }
    }
    SECTION("non-pseudomanifolds are rejected") {
        auto book = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
        REQUIRE_THROWS_AS(orient(book), StructureError);
    }
}

TEST_CASE("fundamental cycles") {
    SECTION("hexagon over Z") {
        auto hex = fx::hexagon();
        auto C = complex_of<Int>(hex);
        Chain<Int> fc = fundamental_cycle(hex, C);
        REQUIRE(fc.terms.size() == 6);
        REQUIRE(C.C.is_cycle(fc));
        auto H1 = homology(C.C, 1);
        REQUIRE_FALSE(H1.is_zero_class(fc));
    }
    SECTION("projective plane over Z/2 generates H_2") {
        auto rp2 = fx::rp2();
        auto C = complex_of<GF2>(rp2);
        Chain<GF2> fc = fundamental_cycle(rp2, C);
        REQUIRE(fc.terms.size() == 10);
        auto H2 = homology(C.C, 2);
        REQUIRE(H2.betti == 1);
        REQUIRE_FALSE(H2.is_zero_class(fc));
    }
    SECTION("projective plane over Z fails with an orientation error") {
        auto rp2 = fx::rp2();
        auto C = complex_of<Int>(rp2);
        REQUIRE_THROWS_AS(fundamental_cycle(rp2, C), OrientationError);
    }
    SECTION("closed chains are required relative to the boundary") {
        auto tri = build_complex({{0, 1, 2}});
        auto abs = complex_of<Int>(tri);
        REQUIRE_THROWS_AS(fundamental_cycle(tri, abs), StructureError);
        auto rel = relative_complex<Int>(tri, analyze(tri).boundary);
        Chain<Int> fc = fundamental_cycle(tri, rel);
        REQUIRE(fc.terms.size() == 1);
    }
}

TEST_CASE("cylinder relative fundamental cycle hits both boundary circles") {
    auto cyl = fx::cylinder();
    auto rep = analyze(cyl);
    REQUIRE(rep.is_pseudomanifold());
    REQUIRE(rep.boundary.size(1) == 12);  // two hexagonal circles
    auto rel = relative_complex<Int>(cyl, rep.boundary);
    Chain<Int> fc = fundamental_cycle(cyl, rel);
    REQUIRE(fc.terms.size() == 12);
    REQUIRE(rel.C.is_cycle(fc));
    // in absolute chains the boundary of the same signed sum is carried
    // entirely by the two boundary circles
    auto abs = complex_of<Int>(cyl);
    Chain<Int> lift(2);
    for (const auto& [cell, g] : fc.terms)
        lift.add(rel.abs_of_rel[2][cell], g);
    Chain<Int> dl = abs.C.boundary(lift);
    REQUIRE_FALSE(dl.empty());
    for (const auto& [cell, g] : dl.terms)
        REQUIRE(rep.boundary.contains(1, cell));
}

TEST_CASE("top fundamental cycle of abstract complexes") {
    SECTION("octahedron chains") {
        auto C = complex_of<Int>(fx::octahedron());
        auto res = top_fundamental_cycle(C.C);
        REQUIRE(res.ok);
        REQUIRE(res.cycle.terms.size() == 8);
        REQUIRE(C.C.is_cycle(res.cycle));
    }
    SECTION("disconnected top cells are reported") {
        auto two = build_complex({{0, 1, 2}, {3, 4, 5}});
        auto C = complex_of<Int>(two);
        auto res = top_fundamental_cycle(C.C);
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.reason == "top cells are not ridge-connected");
    }
    SECTION("orientation conflict over Z, none over Z/2") {
        auto rp2 = fx::rp2();
        auto CZ = complex_of<Int>(rp2);
        auto resZ = top_fundamental_cycle(CZ.C);
        REQUIRE_FALSE(resZ.ok);
        auto C2 = complex_of<GF2>(rp2);
        auto res2 = top_fundamental_cycle(C2.C);
        REQUIRE(res2.ok);
        REQUIRE(res2.cycle.terms.size() == 10);
    }
}
