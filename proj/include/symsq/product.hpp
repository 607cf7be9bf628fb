// The product chain complex of a complex with itself, relative to the
// deleted diagonal neighborhood, together with the coordinate-swap
// involution, the quotient complex, and the subdivision tower used to
// compare constructions across barycentric refinement.
//
// Cells of the product in total degree n are pairs (sigma, tau) with
// dim sigma + dim tau = n.  The diagonal neighborhood D is the face
// closure of the pairs with intersecting supports joined with A x X and
// X x A; concretely (sigma, tau) lies in D iff sigma or tau lies in A,
// or some facet containing sigma meets some facet containing tau.  D is
// closed under faces, and every cell outside D has disjoint supports,
// so the swap acts freely off D.

#ifndef SYMSQ_PRODUCT_HPP
#define SYMSQ_PRODUCT_HPP

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"
#include "symsq/errors.hpp"

namespace symsq {

/// Sign of the coordinate swap on a cell of bidegree (p, q).
inline int tau_sign(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

/// Cap on the number of product cells; SYMSQ_CELL_CAP overrides.
inline long long symsq_cell_cap() {
    if (const char* e = std::getenv("SYMSQ_CELL_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(e, &end, 10);
        if (end == e || *end != '\0' || v <= 0)
            throw InputError("SYMSQ_CELL_CAP must be a positive integer");
        return v;
    }
    return 5'000'000LL;
}

/// Facet-level proximity: two cells are near iff some facet containing
/// the first meets some facet containing the second.
struct FacetProximity {
    std::vector<std::vector<std::vector<int>>> cof;  // [d][i] -> facet ids
    std::vector<std::vector<char>> meets;            // facet x facet

    static FacetProximity build(const SimplicialComplex& X) {
        FacetProximity P;
        auto facet_list = X.facets();
        P.cof = X.facet_cofaces(facet_list);
        const int nf = static_cast<int>(facet_list.size());
        P.meets.assign(nf, std::vector<char>(nf, 0));
        for (int a = 0; a < nf; ++a)
            for (int b = a; b < nf; ++b) {
                const Simplex& F = X.cell(facet_list[a].first, facet_list[a].second);
                const Simplex& G = X.cell(facet_list[b].first, facet_list[b].second);
                std::vector<int> common;
                std::set_intersection(F.begin(), F.end(), G.begin(), G.end(),
                                      std::back_inserter(common));
                P.meets[a][b] = P.meets[b][a] = !common.empty();
            }
        return P;
    }

    bool near(int da, int ia, int db, int ib) const {
        for (int f : cof[da][ia])
            for (int g : cof[db][ib])
                if (meets[f][g]) return true;
        return false;
    }
};

struct ProductCell {
    int p = 0;  // dimension of the first factor
    int i = 0;  // index of the first factor in its dimension
    int j = 0;  // index of the second factor (dimension n - p)
};

template <class T>
class ProductPair {
public:
    const SimplicialComplex* X = nullptr;
    Subcomplex A;
    std::vector<std::vector<ProductCell>> cells;  // [n][abs index]
    std::vector<std::vector<char>> deleted;       // D membership, abs index
    std::vector<std::vector<int>> rel_of_abs;
    std::vector<std::vector<ProductCell>> rel_cells;  // [n][rel index]
    ChainComplex<T> C;                            // relative to D

    int top_degree() const { return static_cast<int>(cells.size()) - 1; }

    /// Absolute index of sigma_i^p x tau_j^q in degree p + q.
    int abs_index(int p, int i, int q, int j) const {
        return off_[p + q][p] + i * X->size(q) + j;
    }

    /// Relative index, or -1 when the cell lies in D.
    int rel_index(int p, int i, int q, int j) const {
        return rel_of_abs[p + q][abs_index(p, i, q, j)];
    }

    /// The swap image of a relative cell: (sign, relative index).
    std::pair<int, int> swap_rel(int n, int rel) const {
        const ProductCell& c = rel_cells[n][rel];
        int q = n - c.p;
        int r = rel_index(q, c.j, c.p, c.i);
        if (r < 0)
            throw StructureError("swap left the complement of D");
        return {tau_sign(c.p, q), r};
    }

    using DeletePredicate = std::function<bool(int p, int i, int q, int j)>;

    /// Product pair with the standard deleted neighborhood of (X, A).
    static ProductPair build(const SimplicialComplex& X, const Subcomplex& A) {
        FacetProximity prox = FacetProximity::build(X);
        Subcomplex Aeff = A.flags().empty() ? Subcomplex::empty(X) : A;
        return build_with(X, Aeff, [&X, &prox, &Aeff](int p, int i, int q, int j) {
            (void)X;
            return Aeff.contains(p, i) || Aeff.contains(q, j) ||
                   prox.near(p, i, q, j);
        });
    }

    /// Product pair with a caller-supplied deletion predicate.  The
    /// predicate must be symmetric and closed under faces.
    static ProductPair build_with(const SimplicialComplex& X,
                                  const Subcomplex& A,
                                  const DeletePredicate& del) {
        long long tot = X.total_cells();
        if (tot * tot > symsq_cell_cap())
            throw ResourceError("product would have " +
                                std::to_string(tot * tot) +
                                " cells, over the cap of " +
                                std::to_string(symsq_cell_cap()));
        ProductPair P;
        P.X = &X;
        P.A = A;
        const int dX = X.dim();
        const int topN = 2 * dX;
        P.cells.resize(topN + 1);
        P.deleted.resize(topN + 1);
        P.rel_of_abs.resize(topN + 1);
        P.rel_cells.resize(topN + 1);
        P.off_.assign(topN + 1, std::vector<int>(dX + 1, -1));
        P.C.sizes.assign(topN + 1, 0);
        P.C.d.resize(topN + 1);

        for (int n = 0; n <= topN; ++n) {
            for (int p = std::max(0, n - dX); p <= std::min(n, dX); ++p) {
                int q = n - p;
                P.off_[n][p] = static_cast<int>(P.cells[n].size());
                for (int i = 0; i < X.size(p); ++i)
                    for (int j = 0; j < X.size(q); ++j)
                        P.cells[n].push_back({p, i, j});
            }
            P.deleted[n].resize(P.cells[n].size());
            P.rel_of_abs[n].assign(P.cells[n].size(), -1);
            for (size_t a = 0; a < P.cells[n].size(); ++a) {
                const ProductCell& c = P.cells[n][a];
                P.deleted[n][a] = del(c.p, c.i, n - c.p, c.j) ? 1 : 0;
                if (!P.deleted[n][a]) {
                    P.rel_of_abs[n][a] = static_cast<int>(P.rel_cells[n].size());
                    P.rel_cells[n].push_back(c);
                }
            }
            P.C.sizes[n] = static_cast<int>(P.rel_cells[n].size());
        }

        // faces of every base cell, shared by both factors
        std::vector<std::vector<std::vector<std::pair<int, int>>>> faces(dX + 1);
        for (int d = 1; d <= dX; ++d) {
            faces[d].resize(X.size(d));
            for (int i = 0; i < X.size(d); ++i) {
                const Simplex& s = X.cell(d, i);
                for (size_t l = 0; l < s.size(); ++l) {
                    Simplex f;
                    for (size_t a = 0; a < s.size(); ++a)
                        if (a != l) f.push_back(s[a]);
                    faces[d][i].emplace_back(l % 2 == 0 ? 1 : -1,
                                             X.index_of(f));
                }
            }
        }

        for (int n = 1; n <= topN; ++n) {
            P.C.d[n].resize(P.C.sizes[n]);
            for (int r = 0; r < P.C.sizes[n]; ++r) {
                const ProductCell& c = P.rel_cells[n][r];
                int q = n - c.p;
                SparseCol<T>& col = P.C.d[n][r];
                if (c.p >= 1)
                    for (const auto& [s, fa] : faces[c.p][c.i]) {
                        int rel = P.rel_index(c.p - 1, fa, q, c.j);
                        if (rel >= 0) col.emplace_back(rel, T(s));
                    }
                if (q >= 1) {
                    int sp = c.p % 2 == 0 ? 1 : -1;
                    for (const auto& [s, fb] : faces[q][c.j]) {
                        int rel = P.rel_index(c.p, c.i, q - 1, fb);
                        if (rel >= 0) col.emplace_back(rel, T(sp * s));
                    }
                }
                std::sort(col.begin(), col.end(),
                          [](const auto& a, const auto& b) {
                              return a.first < b.first;
                          });
            }
        }
        return P;
    }

private:
    std::vector<std::vector<int>> off_;  // [n][p] -> block offset or -1
};

/// Tensor of two relative chains on (X, A), with cells of D dropped.
template <class T>
Chain<T> cross_chain(const ProductPair<T>& P, const SimplicialChains<T>& XA,
                     const Chain<T>& a, const Chain<T>& b) {
    Chain<T> out(a.degree + b.degree);
    for (const auto& [ca, ga] : a.terms)
        for (const auto& [cb, gb] : b.terms) {
            int ia = XA.abs_of_rel[a.degree][ca];
            int jb = XA.abs_of_rel[b.degree][cb];
            int rel = P.rel_index(a.degree, ia, b.degree, jb);
            if (rel >= 0) out.add(rel, ga * gb);
        }
    return out;
}

/// The swap chain map on the relative product.
template <class T>
Chain<T> swap_chain(const ProductPair<T>& P, const Chain<T>& c) {
    Chain<T> out(c.degree);
    for (const auto& [cell, g] : c.terms) {
        auto [sign, r] = P.swap_rel(c.degree, cell);
        out.add(r, g * T(sign));
    }
    return out;
}

/// (f x f) on relative product chains; degenerate factors vanish and
/// image cells inside the codomain's D are dropped.
template <class T>
Chain<T> apply_map_product(const SimplicialMap& f, const ProductPair<T>& dom,
                           const ProductPair<T>& cod, const Chain<T>& c) {
    Chain<T> out(c.degree);
    for (const auto& [cell, g] : c.terms) {
        const ProductCell& pc = dom.rel_cells[c.degree][cell];
        int q = c.degree - pc.p;
        std::vector<int> ia, jb;
        for (int v : dom.X->cell(pc.p, pc.i)) ia.push_back(f(v));
        for (int v : dom.X->cell(q, pc.j)) jb.push_back(f(v));
        int sa = sort_sign(ia), sb = sort_sign(jb);
        if (sa == 0 || sb == 0) continue;
        int rel = cod.rel_index(pc.p, cod.X->index_of(ia), q,
                                cod.X->index_of(jb));
        if (rel >= 0) out.add(rel, g * T(sa * sb));
    }
    return out;
}

/// Quotient of the relative product by the swap.  The action is free
/// off D, so each orbit has two cells; the representative is the one
/// whose factor pair is lexicographically smaller.
template <class T>
class QuotientPair {
public:
    const ProductPair<T>* P = nullptr;
    std::vector<std::vector<int>> orbit_of_rel;  // [n][product rel] -> orbit
    std::vector<std::vector<int>> rep_of_orbit;  // [n][orbit] -> product rel
    std::vector<std::vector<int>> sign_of_rel;   // projection sign, +-1
    ChainComplex<T> C;

    /// The projection pr_# from relative product chains.
    Chain<T> project(const Chain<T>& c) const {
        Chain<T> out(c.degree);
        for (const auto& [cell, g] : c.terms)
            out.add(orbit_of_rel[c.degree][cell],
                    g * T(sign_of_rel[c.degree][cell]));
        return out;
    }

    static QuotientPair build(const ProductPair<T>& P) {
        QuotientPair Q;
        Q.P = &P;
        const int topN = P.top_degree();
        Q.orbit_of_rel.resize(topN + 1);
        Q.rep_of_orbit.resize(topN + 1);
        Q.sign_of_rel.resize(topN + 1);
        Q.C.sizes.assign(topN + 1, 0);
        Q.C.d.resize(topN + 1);
        for (int n = 0; n <= topN; ++n) {
            int m = P.C.size(n);
            Q.orbit_of_rel[n].assign(m, -1);
            Q.sign_of_rel[n].assign(m, 0);
            for (int r = 0; r < m; ++r) {
                if (Q.orbit_of_rel[n][r] >= 0) continue;
                auto [tsign, s] = P.swap_rel(n, r);
                if (s == r)
                    throw StructureError(
                        "swap fixes a cell outside D; the action is not free");
                const ProductCell& c = P.rel_cells[n][r];
                int q = n - c.p;
                const Simplex& sig = P.X->cell(c.p, c.i);
                const Simplex& tau = P.X->cell(q, c.j);
                int rep = (std::make_pair(sig, tau) < std::make_pair(tau, sig))
                              ? r : s;
                int orbit = static_cast<int>(Q.rep_of_orbit[n].size());
                Q.rep_of_orbit[n].push_back(rep);
                Q.orbit_of_rel[n][r] = orbit;
                Q.orbit_of_rel[n][s] = orbit;
                Q.sign_of_rel[n][rep] = 1;
                Q.sign_of_rel[n][rep == r ? s : r] = tsign;
            }
            Q.C.sizes[n] = static_cast<int>(Q.rep_of_orbit[n].size());
        }
        // boundary of an orbit = projected boundary of its representative
        for (int n = 1; n <= topN; ++n) {
            Q.C.d[n].resize(Q.C.sizes[n]);
            for (int o = 0; o < Q.C.sizes[n]; ++o) {
                int rep = Q.rep_of_orbit[n][o];
                std::map<int, T> acc;
                for (const auto& [face, s] : P.C.d[n][rep]) {
                    T v = s * T(Q.sign_of_rel[n - 1][face]);
                    int fo = Q.orbit_of_rel[n - 1][face];
                    acc[fo] += v;
                    if (is_zero(acc[fo])) acc.erase(fo);
                }
                SparseCol<T>& col = Q.C.d[n][o];
                for (const auto& [fo, v] : acc) col.emplace_back(fo, v);
            }
        }
        return Q;
    }
};

/// The subdivision tower over a pair (X, A): level m is the m-fold
/// barycentric subdivision with its relative chains, deleted product
/// and quotient.  Consecutive levels are compared inside a common
/// complex: the product of level m+1 with the coarser deletion pulled
/// back from level m through carriers.
template <class T>
class DiagonalTower {
public:
    struct Level {
        std::unique_ptr<Subdivision> from_prev;  // null at level 0
        const SimplicialComplex* X = nullptr;
        Subcomplex A;
        SimplicialChains<T> rel;
        ProductPair<T> prod;
        QuotientPair<T> quot;
    };

    struct Comparison {
        ProductPair<T> common;   // on level m+1, coarse deletion
        QuotientPair<T> qcommon;
    };

    DiagonalTower(const SimplicialComplex& X0, const Subcomplex& A0)
        : base_(&X0), baseA_(A0.flags().empty() ? Subcomplex::empty(X0) : A0) {}

    const Level& level(int m) {
        build_levels(m);
        return *levels_[m];
    }

    /// sd_# of a relative chain from level m to level m+1.
    Chain<T> subdivide_chain(int m, const Chain<T>& c) {
        build_levels(m + 1);
        return apply_subdivision(*levels_[m + 1]->from_prev, levels_[m]->rel,
                                 levels_[m + 1]->rel, c);
    }

    /// Common complex between levels m and m+1.
    const Comparison& comparison(int m) {
        build_levels(m + 1);
        if (static_cast<int>(comparisons_.size()) <= m)
            comparisons_.resize(m + 1);
        if (!comparisons_[m]) {
            auto cmp = std::make_unique<Comparison>();
            const Level& coarse = *levels_[m];
            const Level& fine = *levels_[m + 1];
            const Subdivision& sd = *fine.from_prev;
            FacetProximity prox = FacetProximity::build(*coarse.X);
            // carriers of the fine cells in the coarse complex
            std::vector<std::vector<std::pair<int, int>>> carr(fine.X->dim() + 1);
            for (int d = 0; d <= fine.X->dim(); ++d) {
                carr[d].resize(fine.X->size(d));
                for (int i = 0; i < fine.X->size(d); ++i)
                    carr[d][i] = sd.top_base_cell(fine.X->cell(d, i));
            }
            const Subcomplex& Ac = coarse.A;
            cmp->common = ProductPair<T>::build_with(
                *fine.X, fine.A,
                [&carr, &prox, &Ac](int p, int i, int q, int j) {
                    auto [da, ia] = carr[p][i];
                    auto [db, ib] = carr[q][j];
                    return Ac.contains(da, ia) || Ac.contains(db, ib) ||
                           prox.near(da, ia, db, ib);
                });
            cmp->qcommon = QuotientPair<T>::build(cmp->common);
            comparisons_[m] = std::move(cmp);
        }
        return *comparisons_[m];
    }

    /// Image in the common quotient of a level-m quotient chain, via
    /// sd_# x sd_# on orbit representatives.
    Chain<T> transport_coarse(int m, const Chain<T>& qc) {
        const Comparison& cmp = comparison(m);
        const Level& coarse = *levels_[m];
        const Subdivision& sd = *levels_[m + 1]->from_prev;
        const SimplicialComplex& fineX = *levels_[m + 1]->X;
        Chain<T> lifted(qc.degree);
        for (const auto& [orbit, g] : qc.terms) {
            int rep = coarse.quot.rep_of_orbit[qc.degree][orbit];
            const ProductCell& c = coarse.prod.rel_cells[qc.degree][rep];
            int q = qc.degree - c.p;
            for (const auto& [sa, pa] : sd.pieces[c.p][c.i])
                for (const auto& [sb, pb] : sd.pieces[q][c.j]) {
                    int rel = cmp.common.rel_index(c.p, fineX.index_of(pa), q,
                                                   fineX.index_of(pb));
                    if (rel >= 0) lifted.add(rel, g * T(sa * sb));
                }
        }
        return cmp.qcommon.project(lifted);
    }

    /// Image in the common quotient of a level-(m+1) quotient chain,
    /// by deleting the terms inside the coarse neighborhood.
    Chain<T> restrict_fine(int m, const Chain<T>& qc) {
        const Comparison& cmp = comparison(m);
        const Level& fine = *levels_[m + 1];
        Chain<T> lifted(qc.degree);
        for (const auto& [orbit, g] : qc.terms) {
            int rep = fine.quot.rep_of_orbit[qc.degree][orbit];
            const ProductCell& c = fine.prod.rel_cells[qc.degree][rep];
            int rel = cmp.common.rel_index(c.p, c.i, qc.degree - c.p, c.j);
            if (rel >= 0) lifted.add(rel, g);
        }
        return cmp.qcommon.project(lifted);
    }

private:
    const SimplicialComplex* base_;
    Subcomplex baseA_;
    std::vector<std::unique_ptr<Level>> levels_;
    std::vector<std::unique_ptr<Comparison>> comparisons_;

    void build_levels(int m) {
        while (static_cast<int>(levels_.size()) <= m) {
            auto L = std::make_unique<Level>();
            if (levels_.empty()) {
                L->X = base_;
                L->A = baseA_;
            } else {
                const Level& prev = *levels_.back();
                L->from_prev = std::make_unique<Subdivision>(
                    barycentric_subdivision(*prev.X));
                L->X = &L->from_prev->complex;
                L->A = L->from_prev->image(prev.A);
            }
            L->rel = relative_complex<T>(*L->X, L->A);
            L->prod = ProductPair<T>::build(*L->X, L->A);
            L->quot = QuotientPair<T>::build(L->prod);
            levels_.push_back(std::move(L));
        }
    }
};

}  // namespace symsq

#endif  // SYMSQ_PRODUCT_HPP
