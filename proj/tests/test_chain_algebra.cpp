#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "symsq/chain.hpp"
#include "symsq/homology.hpp"
#include "symsq/snf.hpp"

using namespace symsq;

namespace {

Matrix<Int> random_matrix(std::mt19937& rng, int m, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix<Int> A(m, std::vector<Int>(n));
    for (auto& row : A)
        for (auto& x : row) x = Int(dist(rng));
    return A;
}

// gcd of all k x k minors, the classical invariant-factor oracle
Int minor_gcd(const Matrix<Int>& A, int k) {
    int m = static_cast<int>(A.size());
    int n = m ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> rows(k), cols(k);
    Int g = 0;
    std::vector<int> rsel, csel;
    std::function<void(int, int)> pick_cols = [&](int start, int left) {
        if (left == 0) {
            // determinant of the selected submatrix by Laplace on perms
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            Int det = 0;
            do {
                int sign = 1;
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                Int prod = sign;
                for (int a = 0; a < k; ++a)
                    prod *= A[rsel[a]][csel[perm[a]]];
                det += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det));
            return;
        }
        for (int c = start; c <= n - left; ++c) {
            csel.push_back(c);
            pick_cols(c + 1, left - 1);
            csel.pop_back();
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int left) {
        if (left == 0) {
            pick_cols(0, k);
            return;
        }
        for (int r = start; r <= m - left; ++r) {
            rsel.push_back(r);
            pick_rows(r + 1, left - 1);
            rsel.pop_back();
        }
    };
    pick_rows(0, k);
    return g;
}

template <class T>
bool is_identity(const Matrix<T>& M) {
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M[i].size(); ++j)
            if (M[i][j] != (i == j ? T(1) : T(0))) return false;
    return true;
}

}  // namespace

TEST_CASE("boundary squares to zero") {
    for (const SimplicialComplex& K :
         {fx::hexagon(), fx::octahedron(), fx::rp2(), fx::cylinder(),
          fx::octahedron_cone()}) {
        REQUIRE(complex_of<Int>(K).C.boundary_squares_to_zero());
        REQUIRE(complex_of<GF2>(K).C.boundary_squares_to_zero());
    }
    auto tri = build_complex({{0, 1, 2}});
    auto bd = Subcomplex::from_facets(tri, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(relative_complex<Int>(tri, bd).C.boundary_squares_to_zero());
}

TEST_CASE("smith normal form on random integer matrices") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + rng() % 8, n = 1 + rng() % 8;
        Matrix<Int> A = random_matrix(rng, m, n, -9, 9);
        SNFResult<Int> R = smith_normal_form(A);
        REQUIRE(matmul(matmul(R.U, R.S), R.V) == A);
        REQUIRE(is_identity(matmul(R.U, R.Uinv)));
        REQUIRE(is_identity(matmul(R.V, R.Vinv)));
        // diagonal shape, nonnegative, divisibility chain
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) REQUIRE(R.S[i][j] == 0);
        for (int i = 0; i < R.rank; ++i) {
            REQUIRE(R.diag[i] > 0);
            if (i + 1 < R.rank) REQUIRE(R.diag[i + 1] % R.diag[i] == 0);
        }
    }
}

TEST_CASE("invariant factors match the minor-gcd oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + rng() % 4, n = 1 + rng() % 4;
        Matrix<Int> A = random_matrix(rng, m, n, -6, 6);
        SNFResult<Int> R = smith_normal_form(A);
        Int prev(1);
        for (int k = 1; k <= std::min(m, n); ++k) {
            Int gk = minor_gcd(A, k);
            if (k <= R.rank) {
                REQUIRE(gk == prev * R.diag[k - 1]);
                prev = gk;
            } else {
                REQUIRE(gk == 0);
            }
        }
    }
}

TEST_CASE("smith normal form over GF2") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + rng() % 8, n = 1 + rng() % 8;
        Matrix<GF2> A(m, std::vector<GF2>(n));
        for (auto& row : A)
            for (auto& x : row) x = GF2(rng() % 2);
        SNFResult<GF2> R = smith_normal_form(A);
        REQUIRE(matmul(matmul(R.U, R.S), R.V) == A);
        REQUIRE(is_identity(matmul(R.U, R.Uinv)));
        REQUIRE(is_identity(matmul(R.V, R.Vinv)));
        for (int i = 0; i < R.rank; ++i) REQUIRE(R.diag[i] == GF2(1));
    }
}

TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + rng() % 8, n = 1 + rng() % 8;
        Matrix<Int> A = random_matrix(rng, m, n, -5, 5);
        std::vector<SparseCol<Int>> cols(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                if (!is_zero(A[i][j])) cols[j].emplace_back(i, A[i][j]);
        REQUIRE(sparse_rank(cols, m) == smith_normal_form(A).rank);
    }
}

TEST_CASE("homology of standard spaces") {
    SECTION("circle (hexagon)") {
        auto C = complex_of<Int>(fx::hexagon());
        REQUIRE(homology(C.C, 0).betti == 1);
        REQUIRE(homology(C.C, 1).betti == 1);
        REQUIRE(homology(C.C, 1).torsion.empty());
    }
    SECTION("2-sphere (octahedron)") {
        auto C = complex_of<Int>(fx::octahedron());
        REQUIRE(homology(C.C, 0).betti == 1);
        REQUIRE(homology(C.C, 1).betti == 0);
        REQUIRE(homology(C.C, 2).betti == 1);
        REQUIRE(homology(C.C, 2).torsion.empty());
    }
    SECTION("projective plane over Z") {
        auto C = complex_of<Int>(fx::rp2());
        REQUIRE(homology(C.C, 0).betti == 1);
        auto H1 = homology(C.C, 1);
        REQUIRE(H1.betti == 0);
        REQUIRE(H1.torsion == std::vector<Int>{2});
        REQUIRE(homology(C.C, 2).betti == 0);
    }
    SECTION("projective plane over Z/2") {
        auto C = complex_of<GF2>(fx::rp2());
        REQUIRE(homology(C.C, 0).betti == 1);
        REQUIRE(homology(C.C, 1).betti == 1);
        REQUIRE(homology(C.C, 2).betti == 1);
    }
    SECTION("triangle rel boundary") {
        auto tri = build_complex({{0, 1, 2}});
        auto bd = Subcomplex::from_facets(tri, {{0, 1}, {1, 2}, {0, 2}});
        auto C = relative_complex<Int>(tri, bd);
        REQUIRE(homology(C.C, 0).betti == 0);
        REQUIRE(homology(C.C, 1).betti == 0);
        REQUIRE(homology(C.C, 2).betti == 1);
    }
    SECTION("edge rel endpoints") {
        auto e = build_complex({{0, 1}});
        auto ends = Subcomplex::from_facets(e, {{0}, {1}});
        auto C = relative_complex<Int>(e, ends);
        REQUIRE(homology(C.C, 0).betti == 0);
        REQUIRE(homology(C.C, 1).betti == 1);
    }
    SECTION("(K, K) vanishes") {
        auto hex = fx::hexagon();
        auto all = Subcomplex::from_facets(
            hex, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
        auto C = relative_complex<Int>(hex, all);
        for (int k = 0; k <= 1; ++k) {
            REQUIRE(homology(C.C, k).betti == 0);
            REQUIRE(homology(C.C, k).torsion.empty());
        }
    }
}

TEST_CASE("universal coefficients consistency") {
    // over GF2: dim H_k(Z2) = betti_k + t_k + t_{k-1} with t = number of
    // even torsion factors
    for (const SimplicialComplex& K :
         {fx::octahedron(), fx::rp2(), fx::hexagon()}) {
        auto CZ = complex_of<Int>(K);
        auto C2 = complex_of<GF2>(K);
        std::vector<int> even_torsion(K.dim() + 2, 0);
        std::vector<int> betti(K.dim() + 1, 0);
        for (int k = 0; k <= K.dim(); ++k) {
            auto H = homology(CZ.C, k);
            betti[k] = H.betti;
            for (const Int& t : H.torsion)
                if (t % 2 == 0) ++even_torsion[k];
        }
        for (int k = 0; k <= K.dim(); ++k) {
            int expect = betti[k] + even_torsion[k] +
                         (k >= 1 ? even_torsion[k - 1] : 0);
            REQUIRE(homology(C2.C, k).betti == expect);
        }
    }
}

TEST_CASE("euler characteristic matches betti alternating sum") {
    for (const SimplicialComplex& K :
         {fx::hexagon(), fx::octahedron(), fx::rp2(), fx::cylinder()}) {
        auto C = complex_of<GF2>(K);
        long long chi = 0;
        for (int k = 0; k <= K.dim(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * homology(C.C, k).betti;
        REQUIRE(chi == C.C.euler_characteristic());
    }
}

TEST_CASE("representatives are cycles and have unit coordinates") {
    auto C = complex_of<Int>(fx::rp2());
    for (int k = 0; k <= 2; ++k) {
        auto H = homology(C.C, k);
        for (const auto& rep : H.free_reps) REQUIRE(C.C.is_cycle(rep));
        for (const auto& rep : H.torsion_reps) {
            REQUIRE(C.C.is_cycle(rep));
            REQUIRE_FALSE(H.is_zero_class(rep));
        }
    }
}

TEST_CASE("classes_equal distinguishes and identifies cycles") {
    auto hex = fx::hexagon();
    auto C = complex_of<Int>(hex);
    Chain<Int> loop = fx::hexagon_fc<Int>(C);
    Chain<Int> zero(1);
    REQUIRE_FALSE(classes_equal(C.C, 1, loop, zero));
    REQUIRE(classes_equal(C.C, 1, loop, loop));
    REQUIRE(classes_equal(C.C, 1, loop + loop, loop * Int(2)));

    // on the solid hexagon the same loop bounds
    auto disc = build_complex(
        {{0, 1, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {0, 5, 6}});
    auto CD = complex_of<Int>(disc);
    Chain<Int> dloop = fx::hexagon_fc<Int>(CD);
    REQUIRE(classes_equal(CD.C, 1, dloop, Chain<Int>(1)));

    Chain<Int> notcycle(1);
    notcycle.add(0, Int(1));
    REQUIRE_THROWS_AS(classes_equal(C.C, 1, notcycle, zero),
                      PreconditionError);
}

TEST_CASE("coordinates detect torsion classes") {
    auto C = complex_of<Int>(fx::rp2());
    auto H1 = homology(C.C, 1);
    REQUIRE(H1.torsion_reps.size() == 1);
    const Chain<Int>& t = H1.torsion_reps[0];
    auto coords = H1.coordinates(t);
    REQUIRE_FALSE(coords.is_zero());
    // twice the torsion generator dies
    REQUIRE(H1.is_zero_class(t + t));
    REQUIRE(classes_equal(C.C, 1, t + t, Chain<Int>(1)));
}

TEST_CASE("betti_sparse agrees with the dense homology rank") {
    for (const SimplicialComplex& K :
         {fx::hexagon(), fx::octahedron(), fx::rp2()}) {
        auto C = complex_of<GF2>(K);
        for (int k = 0; k <= K.dim(); ++k)
            REQUIRE(betti_sparse(C.C, k) == homology(C.C, k).betti);
    }
}
