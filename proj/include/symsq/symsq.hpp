// The symmetric-squaring chain map and the theorem checkers built on
// it: half-square, well-definedness across the subdivision tower,
// naturality, the fundamental class homomorphism and its
// compatibility, and the fundamental-square comparison.

#ifndef SYMSQ_SYMSQ_HPP
#define SYMSQ_SYMSQ_HPP

#include <string>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"
#include "symsq/errors.hpp"
#include "symsq/homology.hpp"
#include "symsq/manifolds.hpp"
#include "symsq/product.hpp"

namespace symsq {

/// Over Z the swap has sign (-1)^{k*k} = -1 in odd degree k, which
/// kills the construction; only even degrees are admitted.
template <class T>
void check_parity(int k) {
    if constexpr (!RingTraits<T>::is_field)
        if (k % 2 != 0) throw ParityError(k);
}

/// sum over i < j of g_i g_j pr(sigma_i x sigma_j), in the canonical
/// cell order.  Pairs with nearby supports lie in D and vanish.
template <class T>
Chain<T> sym_square_chain(const SimplicialChains<T>& XA,
                          const ProductPair<T>& P, const QuotientPair<T>& Q,
                          const Chain<T>& z) {
    check_parity<T>(z.degree);
    Chain<T> dz = XA.C.boundary(z);
    if (!dz.empty())
        throw PreconditionError(
            "sym_square_chain: input is not a relative cycle in degree " +
            std::to_string(z.degree));
    const int k = z.degree;
    Chain<T> lifted(2 * k);
    for (auto it = z.terms.begin(); it != z.terms.end(); ++it)
        for (auto jt = std::next(it); jt != z.terms.end(); ++jt) {
            int ia = XA.abs_of_rel[k][it->first];
            int jb = XA.abs_of_rel[k][jt->first];
            int rel = P.rel_index(k, ia, k, jb);
            if (rel >= 0) lifted.add(rel, it->second * jt->second);
        }
    return Q.project(lifted);
}

/// As sym_square_chain, with the cycle property of the output asserted
/// rather than assumed.
template <class T>
Chain<T> sym_square_class(const SimplicialChains<T>& XA,
                          const ProductPair<T>& P, const QuotientPair<T>& Q,
                          const Chain<T>& z) {
    Chain<T> s = sym_square_chain(XA, P, Q, z);
    Chain<T> ds = Q.C.boundary(s);
    if (!ds.empty()) {
        std::string msg =
            "sym_square output is not a cycle; boundary has cells";
        for (const auto& [cell, g] : ds.terms)
            msg += " #" + std::to_string(cell);
        throw PreconditionError(msg);
    }
    return s;
}

template <class T>
Chain<T> sym_square_chain(const typename DiagonalTower<T>::Level& L,
                          const Chain<T>& z) {
    return sym_square_chain(L.rel, L.prod, L.quot, z);
}

template <class T>
Chain<T> sym_square_class(const typename DiagonalTower<T>::Level& L,
                          const Chain<T>& z) {
    return sym_square_class(L.rel, L.prod, L.quot, z);
}

/// (sys f) on quotient chains: lift orbits to representatives, apply
/// f x f, project in the codomain quotient.
template <class T>
Chain<T> apply_map_quotient(const SimplicialMap& f, const ProductPair<T>& Pd,
                            const QuotientPair<T>& Qd,
                            const ProductPair<T>& Pc,
                            const QuotientPair<T>& Qc, const Chain<T>& c) {
    Chain<T> lifted(c.degree);
    for (const auto& [orbit, g] : c.terms)
        lifted.add(Qd.rep_of_orbit[c.degree][orbit], g);
    return Qc.project(apply_map_product(f, Pd, Pc, lifted));
}

// ---------------------------------------------------------------------
// theorem checkers

struct HalfSquareReport {
    bool result = false;
    int level = 0;
    bool projected_square_null = false;  // Z2 side of the remark
};

/// Z: classes of 2 * sys(z) and pr(z x z) agree.  Z2: pr(z x z) is
/// null-homologous (the doubled chain dies).
template <class T>
HalfSquareReport half_square_check(DiagonalTower<T>& tower, int level,
                                   const Chain<T>& z0) {
    HalfSquareReport rep;
    rep.level = level;
    Chain<T> z = z0;
    for (int l = 0; l < level; ++l) z = tower.subdivide_chain(l, z);
    const auto& L = tower.level(level);
    Chain<T> s = sym_square_class<T>(L, z);
    Chain<T> sq = L.quot.project(cross_chain(L.prod, L.rel, z, z));
    Chain<T> zero(2 * z.degree);
    rep.projected_square_null = classes_equal(L.quot.C, 2 * z.degree, sq, zero);
    if constexpr (RingTraits<T>::is_field) {
        rep.result = rep.projected_square_null;
    } else {
        rep.result = classes_equal(L.quot.C, 2 * z.degree, s + s, sq);
    }
    return rep;
}

struct WellDefinedReport {
    bool result = false;
    int first_level = -1;          // first level at which classes agree
    std::vector<char> equal_at;    // one entry per level tried
};

/// Compare sys(z) and sys(z + boundary(w)) level by level up to
/// `max_level`; failure is data, not an error.
template <class T>
WellDefinedReport well_definedness_check(DiagonalTower<T>& tower,
                                         const Chain<T>& z0, const Chain<T>& w,
                                         int max_level) {
    WellDefinedReport rep;
    Chain<T> z = z0;
    Chain<T> z2 = z0 + tower.level(0).rel.C.boundary(w);
    for (int l = 0; l <= max_level; ++l) {
        if (l > 0) {
            z = tower.subdivide_chain(l - 1, z);
            z2 = tower.subdivide_chain(l - 1, z2);
        }
        const auto& L = tower.level(l);
        Chain<T> s1 = sym_square_class<T>(L, z);
        Chain<T> s2 = sym_square_class<T>(L, z2);
        bool eq = classes_equal(L.quot.C, 2 * z.degree, s1, s2);
        rep.equal_at.push_back(eq ? 1 : 0);
        if (eq && rep.first_level < 0) rep.first_level = l;
    }
    rep.result = rep.first_level >= 0;
    return rep;
}

/// Pair map precondition: every cell of B maps into A.
inline void require_pair_map(const SimplicialMap& g, const Subcomplex& B,
                             const Subcomplex& A) {
    for (int d = 0; d < static_cast<int>(B.flags().size()); ++d)
        for (int i = 0; i < static_cast<int>(B.flags()[d].size()); ++i) {
            if (!B.contains(d, i)) continue;
            Simplex img = g.image_simplex(g.domain->cell(d, i));
            int idx = g.codomain->index_of(img);
            if (idx < 0 || !A.contains(static_cast<int>(img.size()) - 1, idx))
                throw InputError("map does not send the subcomplex into the "
                                 "codomain subcomplex");
        }
}

struct NaturalityReport {
    bool result = false;
    int level = 0;
};

/// sys(g)_# after sys on (Y,B) versus sys after g_# on (X,A).
template <class T>
NaturalityReport naturality_check(const SimplicialMap& g0,
                                  DiagonalTower<T>& src, DiagonalTower<T>& dst,
                                  const Chain<T>& z0, int level) {
    require_pair_map(g0, src.level(0).A, dst.level(0).A);
    NaturalityReport rep;
    rep.level = level;
    SimplicialMap g = g0;
    Chain<T> z = z0;
    for (int l = 0; l < level; ++l) {
        z = src.subdivide_chain(l, z);
        g = subdivide_map(g, *src.level(l + 1).from_prev,
                          *dst.level(l + 1).from_prev);
    }
    const auto& LY = src.level(level);
    const auto& LX = dst.level(level);
    Chain<T> gz = apply_simplicial_map(g, LY.rel, LX.rel, z);
    Chain<T> leg1 = sym_square_class<T>(LX, gz);
    Chain<T> sz = sym_square_class<T>(LY, z);
    Chain<T> leg2 =
        apply_map_quotient(g, LY.prod, LY.quot, LX.prod, LX.quot, sz);
    rep.result = classes_equal(LX.quot.C, 2 * z.degree, leg1, leg2);
    return rep;
}

/// Fundamental class homomorphism: push the relative fundamental cycle
/// of (M, boundary M) forward along f.  Returns the image chain; the
/// caller interprets it through the codomain homology.
template <class T>
Chain<T> mu(const SimplicialMap& f, const SimplicialChains<T>& M_rel,
            const SimplicialChains<T>& X_rel) {
    Chain<T> fc = fundamental_cycle(*f.domain, M_rel);
    return apply_simplicial_map(f, M_rel, X_rel, fc);
}

struct CompatReport {
    bool result = false;
    int level = 0;
};

/// Prop. compatibility: squaring the mu-image of the fundamental cycle
/// agrees with pushing the squared fundamental cycle through sys(f).
template <class T>
CompatReport compat_check(const SimplicialMap& f0, DiagonalTower<T>& src,
                          DiagonalTower<T>& dst, int level) {
    require_pair_map(f0, src.level(0).A, dst.level(0).A);
    CompatReport rep;
    rep.level = level;
    Chain<T> fc = fundamental_cycle(*f0.domain, src.level(0).rel);
    check_parity<T>(fc.degree);
    SimplicialMap f = f0;
    Chain<T> z = fc;
    for (int l = 0; l < level; ++l) {
        z = src.subdivide_chain(l, z);
        f = subdivide_map(f, *src.level(l + 1).from_prev,
                          *dst.level(l + 1).from_prev);
    }
    const auto& LM = src.level(level);
    const auto& LX = dst.level(level);
    Chain<T> leg1 =
        sym_square_class<T>(LX, apply_simplicial_map(f, LM.rel, LX.rel, z));
    Chain<T> leg2 = apply_map_quotient(f, LM.prod, LM.quot, LX.prod, LX.quot,
                                       sym_square_class<T>(LM, z));
    rep.result = classes_equal(LX.quot.C, 2 * z.degree, leg1, leg2);
    return rep;
}

struct FundSquareReport {
    bool result = false;
    int level = 0;            // level actually used
    bool escalated = false;   // quotient not a pseudomanifold at entry level
    std::string reason;
};

/// Thm. on fundamental classes: sys maps the fundamental class of a
/// closed pseudomanifold to the relative fundamental class of the
/// quotient pair, up to a global sign over Z.
template <class T>
FundSquareReport fundamental_square_check(DiagonalTower<T>& tower, int level,
                                          int max_level) {
    FundSquareReport rep;
    const SimplicialComplex& M = *tower.level(0).X;
    PseudomanifoldReport pm = analyze(M);
    if (!pm.is_pseudomanifold() || !pm.boundary.is_empty())
        throw StructureError(
            "fundamental_square_check: complex is not a closed pseudomanifold");
    Chain<T> z = fundamental_cycle(M, tower.level(0).rel);
    check_parity<T>(z.degree);
    for (int l = 0; l < level; ++l) z = tower.subdivide_chain(l, z);
    for (int l = level; l <= max_level; ++l) {
        const auto& L = tower.level(l);
        TopCycleResult<T> qfc = top_fundamental_cycle(L.quot.C);
        if (!qfc.ok) {
            rep.reason = qfc.reason;
            rep.escalated = true;
            if (l == max_level) {
                rep.level = l;
                return rep;
            }
            z = tower.subdivide_chain(l, z);
            continue;
        }
        Chain<T> s = sym_square_class<T>(L, z);
        rep.level = l;
        rep.result = classes_equal(L.quot.C, 2 * z.degree, s, qfc.cycle) ||
                     classes_equal(L.quot.C, 2 * z.degree, s,
                                   Chain<T>(qfc.cycle.degree) - qfc.cycle);
        rep.reason.clear();
        return rep;
    }
    return rep;
}

}  // namespace symsq

#endif  // SYMSQ_SYMSQ_HPP
