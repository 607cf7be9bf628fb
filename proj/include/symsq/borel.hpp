// Finite approximation of the Borel construction: the triple complex
// X x X x S^N with the involution (a, b, c) -> (b, a, -c), quotiented
// to an orbit complex.  The sphere factor is the boundary of a
// cross-polytope with the antipodal involution, which is free on
// cells, so the orbit complex is well-formed in every degree.
// Coefficients are Z/2 throughout, where the comparison theorem of the
// source material lives; this also makes orbit signs trivial.

#ifndef SYMSQ_BOREL_HPP
#define SYMSQ_BOREL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"
#include "symsq/errors.hpp"
#include "symsq/homology.hpp"
#include "symsq/product.hpp"

namespace symsq {

struct EquivariantSphere {
    int N = 0;
    SimplicialComplex complex;

    /// Vertices are 0..2N+1; v and v + N + 1 are antipodal.
    int antipode(int v) const { return (v + N + 1) % (2 * (N + 1)); }
};

/// Boundary of the (N+1)-dimensional cross-polytope: one facet per
/// choice of sign in each of the N+1 axes.
inline EquivariantSphere antipodal_sphere(int N) {
    if (N < 0) throw InputError("sphere dimension must be nonnegative");
    EquivariantSphere S;
    S.N = N;
    std::vector<Simplex> facets;
    for (unsigned mask = 0; mask < (1u << (N + 1)); ++mask) {
        Simplex f;
        for (int i = 0; i <= N; ++i)
            f.push_back((mask & (1u << i)) ? i + N + 1 : i);
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    S.complex = SimplicialComplex::from_facets(facets);
    return S;
}

/// Orbit complex of X x X x S^N under (a,b,c) -> (b,a,-c), with the
/// diagonal-neighborhood orbits marked; C_abs is the full orbit
/// complex, C_rel deletes the marked part.
class BorelComplex {
public:
    const SimplicialComplex* X = nullptr;
    EquivariantSphere S;
    ChainComplex<GF2> C_abs;
    ChainComplex<GF2> C_rel;

    static BorelComplex build(const SimplicialComplex& X, int N) {
        BorelComplex B;
        B.X = &X;
        B.S = antipodal_sphere(N);
        const SimplicialComplex& Sc = B.S.complex;
        long long tot =
            static_cast<long long>(X.total_cells()) * X.total_cells() *
            Sc.total_cells();
        if (tot > symsq_cell_cap())
            throw ResourceError("Borel complex would have " +
                                std::to_string(tot) + " cells, over the cap");
        FacetProximity prox = FacetProximity::build(X);
        const int dX = X.dim(), dS = Sc.dim();
        const int topN = 2 * dX + dS;

        // absolute indices per degree, offset by the dimension triple
        struct Block { int da, db, dc, start; };
        std::vector<std::vector<Block>> blocks(topN + 1);
        std::vector<int> count(topN + 1, 0);
        for (int da = 0; da <= dX; ++da)
            for (int db = 0; db <= dX; ++db)
                for (int dc = 0; dc <= dS; ++dc) {
                    int n = da + db + dc;
                    blocks[n].push_back({da, db, dc, count[n]});
                    count[n] += X.size(da) * X.size(db) * Sc.size(dc);
                }
        auto abs_index = [&](int n, int da, int ia, int db, int ib, int dc,
                             int ic) {
            for (const Block& b : blocks[n])
                if (b.da == da && b.db == db && b.dc == dc)
                    return b.start +
                           (ia * X.size(db) + ib) * Sc.size(dc) + ic;
            return -1;
        };

        // antipodal image (index and nothing else; Z/2) of sphere cells
        std::vector<std::vector<int>> anti(dS + 1);
        for (int d = 0; d <= dS; ++d) {
            anti[d].resize(Sc.size(d));
            for (int i = 0; i < Sc.size(d); ++i) {
                Simplex img;
                for (int v : Sc.cell(d, i)) img.push_back(B.S.antipode(v));
                std::sort(img.begin(), img.end());
                anti[d][i] = Sc.index_of(img);
            }
        }
        auto swapped = [&](int n, int da, int ia, int db, int ib, int dc,
                           int ic) {
            return abs_index(n, db, ib, da, ia, dc, anti[dc][ic]);
        };

        // orbits; the representative is the cell of smaller absolute index
        std::vector<std::vector<int>> orbit_of(topN + 1);
        std::vector<std::vector<std::array<int, 6>>> rep(topN + 1);
        std::vector<std::vector<char>> marked(topN + 1);  // per orbit
        for (int n = 0; n <= topN; ++n) {
            orbit_of[n].assign(count[n], -1);
            for (const Block& b : blocks[n])
                for (int ia = 0; ia < X.size(b.da); ++ia)
                    for (int ib = 0; ib < X.size(b.db); ++ib)
                        for (int ic = 0; ic < Sc.size(b.dc); ++ic) {
                            int a = abs_index(n, b.da, ia, b.db, ib, b.dc, ic);
                            if (orbit_of[n][a] >= 0) continue;
                            int s = swapped(n, b.da, ia, b.db, ib, b.dc, ic);
                            if (s == a)
                                throw StructureError(
                                    "involution fixes a Borel cell");
                            int o = static_cast<int>(rep[n].size());
                            orbit_of[n][a] = o;
                            orbit_of[n][s] = o;
                            rep[n].push_back({b.da, ia, b.db, ib, b.dc, ic});
                            marked[n].push_back(
                                prox.near(b.da, ia, b.db, ib) ? 1 : 0);
                        }
        }

        // faces of base cells, indices only (Z/2 drops signs)
        auto faces_of = [](const SimplicialComplex& K) {
            std::vector<std::vector<std::vector<int>>> F(K.dim() + 1);
            for (int d = 1; d <= K.dim(); ++d) {
                F[d].resize(K.size(d));
                for (int i = 0; i < K.size(d); ++i) {
                    const Simplex& s = K.cell(d, i);
                    for (size_t l = 0; l < s.size(); ++l) {
                        Simplex f;
                        for (size_t a = 0; a < s.size(); ++a)
                            if (a != l) f.push_back(s[a]);
                        F[d][i].push_back(K.index_of(f));
                    }
                }
            }
            return F;
        };
        auto FX = faces_of(X);
        auto FS = faces_of(Sc);

        // relative basis = unmarked orbits
        std::vector<std::vector<int>> rel_of_orbit(topN + 1);
        B.C_abs.sizes.assign(topN + 1, 0);
        B.C_abs.d.resize(topN + 1);
        B.C_rel.sizes.assign(topN + 1, 0);
        B.C_rel.d.resize(topN + 1);
        for (int n = 0; n <= topN; ++n) {
            B.C_abs.sizes[n] = static_cast<int>(rep[n].size());
            rel_of_orbit[n].assign(rep[n].size(), -1);
            for (size_t o = 0; o < rep[n].size(); ++o)
                if (!marked[n][o])
                    rel_of_orbit[n][o] = B.C_rel.sizes[n]++;
        }
        for (int n = 1; n <= topN; ++n) {
            B.C_abs.d[n].resize(B.C_abs.sizes[n]);
            B.C_rel.d[n].resize(B.C_rel.sizes[n]);
            for (int o = 0; o < B.C_abs.sizes[n]; ++o) {
                auto [da, ia, db, ib, dc, ic] = rep[n][o];
                std::map<int, GF2> acc;
                auto add_face = [&](int fa, int fia, int fb, int fib, int fs,
                                    int fic) {
                    int a = abs_index(n - 1, fa, fia, fb, fib, fs, fic);
                    int fo = orbit_of[n - 1][a];
                    acc[fo] += GF2(1);
                    if (is_zero(acc[fo])) acc.erase(fo);
                };
                if (da >= 1)
                    for (int f : FX[da][ia]) add_face(da - 1, f, db, ib, dc, ic);
                if (db >= 1)
                    for (int f : FX[db][ib]) add_face(da, ia, db - 1, f, dc, ic);
                if (dc >= 1)
                    for (int f : FS[dc][ic]) add_face(da, ia, db, ib, dc - 1, f);
                for (const auto& [fo, v] : acc) {
                    B.C_abs.d[n][o].emplace_back(fo, v);
                    int ro = rel_of_orbit[n][o];
                    int rf = rel_of_orbit[n - 1][fo];
                    if (ro >= 0 && rf >= 0)
                        B.C_rel.d[n][ro].emplace_back(rf, v);
                }
            }
        }
        return B;
    }
};

struct BorelCompareEntry {
    int degree = 0;
    int betti_borel = 0;
    int betti_sys = 0;       // at level m
    int betti_sys_next = 0;  // at level m+1
    bool equal = false;
    bool stable = false;     // sys side agrees across the two levels
    bool reliable = true;    // degree within the N-1 approximation bound
};

struct BorelCompareReport {
    int N = 0;
    int level = 0;
    bool result = false;  // all reliable degrees equal
    std::vector<BorelCompareEntry> entries;
};

/// Z/2 Betti comparison between the Borel pair and the symmetric
/// square pair of X, per degree, with stabilization of the sys side
/// across levels `level` and `level + 1`.
inline BorelCompareReport borel_compare(const SimplicialComplex& X, int N,
                                        const std::vector<int>& degrees,
                                        int level) {
    BorelCompareReport rep;
    rep.N = N;
    rep.level = level;
    BorelComplex B = BorelComplex::build(X, N);
    DiagonalTower<GF2> tower(X, Subcomplex::empty(X));
    const auto& Lm = tower.level(level);
    const auto& Ln = tower.level(level + 1);
    rep.result = true;
    for (int i : degrees) {
        BorelCompareEntry e;
        e.degree = i;
        e.betti_borel = betti_sparse(B.C_rel, i);
        e.betti_sys = betti_sparse(Lm.quot.C, i);
        e.betti_sys_next = betti_sparse(Ln.quot.C, i);
        e.equal = e.betti_borel == e.betti_sys;
        e.stable = e.betti_sys == e.betti_sys_next;
        e.reliable = i <= N - 1;
        if (e.reliable && !e.equal) rep.result = false;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace symsq

#endif  // SYMSQ_BOREL_HPP
