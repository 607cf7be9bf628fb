// Pseudomanifold recognition, orientability and fundamental cycles.
//
// "Manifold" here means a pure, strongly connected complex in which
// every ridge lies in at most two facets.  That is enough to make the
// top-degree fundamental cycle exist and be unique up to sign, and it
// is decidable by plain enumeration.  The same orientation propagation
// is provided for an abstract chain complex in its top degree, which is
// how quotient complexes get their relative fundamental cycles.

#ifndef SYMSQ_MANIFOLDS_HPP
#define SYMSQ_MANIFOLDS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"
#include "symsq/errors.hpp"

namespace symsq {

struct PseudomanifoldReport {
    bool pure = false;
    bool ridge_ok = false;            // every ridge in at most 2 facets
    bool strongly_connected = false;  // facet adjacency through ridges
    Subcomplex boundary;              // closure of ridges in exactly 1 facet

    bool is_pseudomanifold() const {
        return pure && ridge_ok && strongly_connected;
    }
};

namespace detail {

/// Incidence of ridges in top cells: for ridge r the list of
/// (facet index, incidence sign) pairs.
inline std::vector<std::vector<std::pair<int, int>>> ridge_incidence(
    const SimplicialComplex& K) {
    const int n = K.dim();
    std::vector<std::vector<std::pair<int, int>>> inc(K.size(n - 1));
    for (int j = 0; j < K.size(n); ++j) {
        const Simplex& s = K.cell(n, j);
        for (size_t l = 0; l < s.size(); ++l) {
            Simplex r;
            for (size_t a = 0; a < s.size(); ++a)
                if (a != l) r.push_back(s[a]);
            inc[K.index_of(r)].emplace_back(j, l % 2 == 0 ? 1 : -1);
        }
    }
    return inc;
}

}  // namespace detail

inline PseudomanifoldReport analyze(const SimplicialComplex& K) {
    PseudomanifoldReport rep;
    const int n = K.dim();
    rep.pure = true;
    for (auto [d, i] : K.facets())
        if (d != n) rep.pure = false;
    if (n == 0) {
        rep.ridge_ok = true;
        rep.strongly_connected = K.size(0) == 1;
        rep.boundary = Subcomplex::empty(K);
        return rep;
    }
    auto inc = detail::ridge_incidence(K);
    rep.ridge_ok = true;
    std::vector<Simplex> bd;
    for (int r = 0; r < K.size(n - 1); ++r) {
        if (inc[r].size() > 2) rep.ridge_ok = false;
        if (inc[r].size() == 1) bd.push_back(K.cell(n - 1, r));
    }
    rep.boundary = Subcomplex::from_facets(K, bd);
    // facet adjacency through shared ridges
    std::vector<int> comp(K.size(n), -1);
    std::vector<int> stack;
    if (K.size(n) > 0) {
        comp[0] = 0;
        stack.push_back(0);
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            const Simplex& s = K.cell(n, j);
            for (size_t l = 0; l < s.size(); ++l) {
                Simplex r;
                for (size_t a = 0; a < s.size(); ++a)
                    if (a != l) r.push_back(s[a]);
                for (auto [k, sg] : inc[K.index_of(r)])
                    if (comp[k] < 0) {
                        comp[k] = 0;
                        stack.push_back(k);
                    }
            }
        }
    }
    rep.strongly_connected =
        std::find(comp.begin(), comp.end(), -1) == comp.end() && K.size(n) > 0;
    return rep;
}

struct Orientation {
    bool orientable = false;
    std::vector<int> signs;    // per top cell, +-1
    std::vector<int> witness;  // facet cycle forcing a contradiction
};

/// Coherent orientation by sign propagation over the facet adjacency
/// graph, seeded at facet `seed` with +1.
inline Orientation orient(const SimplicialComplex& K, int seed = 0) {
    PseudomanifoldReport rep = analyze(K);
    if (!rep.pure || !rep.ridge_ok)
        throw StructureError("orient: complex is not a pseudomanifold");
    const int n = K.dim();
    Orientation o;
    o.signs.assign(K.size(n), 0);
    if (n == 0) {
        o.orientable = true;
        o.signs.assign(K.size(0), 1);
        return o;
    }
    auto inc = detail::ridge_incidence(K);
    std::vector<int> parent(K.size(n), -1);
    // seed each ridge-connected component with +1, starting from `seed`
    for (int c = 0; c < K.size(n); ++c) {
        int start = (seed + c) % K.size(n);
        if (o.signs[start] != 0) continue;
        o.signs[start] = 1;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            const Simplex& s = K.cell(n, j);
            for (size_t l = 0; l < s.size(); ++l) {
                Simplex r;
                for (size_t a = 0; a < s.size(); ++a)
                    if (a != l) r.push_back(s[a]);
                const auto& at_ridge = inc[K.index_of(r)];
                for (auto [k, theirs] : at_ridge) {
                    if (k == j) continue;
                    int my = 0;
                    for (auto [f, fs] : at_ridge)
                        if (f == j) my = fs;
                    int forced = -o.signs[j] * my * theirs;
                    if (o.signs[k] == 0) {
                        o.signs[k] = forced;
                        parent[k] = j;
                        stack.push_back(k);
                    } else if (o.signs[k] != forced) {
                        // walk both ancestries to exhibit the bad cycle
                        std::vector<int> pj, pk;
                        for (int x = j; x >= 0; x = parent[x]) pj.push_back(x);
                        for (int x = k; x >= 0; x = parent[x]) pk.push_back(x);
                        std::reverse(pj.begin(), pj.end());
                        std::reverse(pk.begin(), pk.end());
                        size_t w = 0;
                        while (w + 1 < pj.size() && w + 1 < pk.size() &&
                               pj[w + 1] == pk[w + 1])
                            ++w;
                        o.witness.assign(pj.begin() + w, pj.end());
                        std::vector<int> back(pk.begin() + w + 1, pk.end());
                        o.witness.insert(o.witness.end(), back.rbegin(),
                                         back.rend());
                        o.orientable = false;
                        return o;
                    }
                }
            }
        }
    }
    o.orientable = true;
    return o;
}

/// The fundamental cycle in the top degree of CX, which must be the
/// absolute chains of K (closed case) or the chains relative to the
/// boundary subcomplex.  Over Z the complex must be orientable.
template <class T>
Chain<T> fundamental_cycle(const SimplicialComplex& K,
                           const SimplicialChains<T>& CX) {
    PseudomanifoldReport rep = analyze(K);
    if (!rep.pure || !rep.ridge_ok)
        throw StructureError(
            "fundamental_cycle: complex is not a pseudomanifold");
    const int n = K.dim();
    Chain<T> fc(n);
    if constexpr (RingTraits<T>::is_field) {
        for (int j = 0; j < K.size(n); ++j) {
            int rel = CX.rel_of_abs[n][j];
            if (rel >= 0) fc.add(rel, T(1));
        }
    } else {
        Orientation o = orient(K);
        if (!o.orientable)
            throw OrientationError(
                "fundamental_cycle: complex is not orientable over Z");
        for (int j = 0; j < K.size(n); ++j) {
            int rel = CX.rel_of_abs[n][j];
            if (rel >= 0) fc.add(rel, T(o.signs[j]));
        }
    }
    if (!CX.C.is_cycle(fc))
        throw StructureError(
            "fundamental_cycle: signed facet sum is not a cycle; pass the "
            "chains relative to the boundary subcomplex");
    return fc;
}

/// Top-degree fundamental cycle of an abstract chain complex, for the
/// quotient complexes: propagate signs across top cells sharing a
/// ridge, require every ridge in at most two top cells and a connected
/// top-cell graph, then check the signed sum is a cycle.
template <class T>
struct TopCycleResult {
    bool ok = false;
    std::string reason;
    Chain<T> cycle{0};
};

template <class T>
TopCycleResult<T> top_fundamental_cycle(const ChainComplex<T>& C) {
    TopCycleResult<T> out;
    const int n = C.top();
    out.cycle = Chain<T>(n);
    const int m = C.size(n);
    if (m == 0) {
        out.reason = "no top cells";
        return out;
    }
    std::vector<std::vector<std::pair<int, T>>> inc(C.size(n - 1));
    for (int j = 0; j < m; ++j)
        for (const auto& [r, c] : C.d[n][j]) inc[r].emplace_back(j, c);
    for (const auto& e : inc)
        if (e.size() > 2) {
            out.reason = "a ridge lies in more than two top cells";
            return out;
        }
    std::vector<int> sign(m, 0);
    sign[0] = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        for (const auto& [r, cj] : C.d[n][j])
            for (const auto& [k, ck] : inc[r]) {
                if (k == j) continue;
                // want sign[j]*cj + sign[k]*ck = 0 with entries +-1
                if (!(cj * cj == T(1) && ck * ck == T(1))) {
                    out.reason = "ridge incidence coefficient is not a unit";
                    return out;
                }
                int forced = (cj == ck) ? -sign[j] : sign[j];
                if constexpr (RingTraits<T>::is_field) forced = 1;
                if (sign[k] == 0) {
                    sign[k] = forced;
                    stack.push_back(k);
                } else if (sign[k] != forced) {
                    out.reason = "orientation conflict in the top degree";
                    return out;
                }
            }
    }
    if (std::find(sign.begin(), sign.end(), 0) != sign.end()) {
        out.reason = "top cells are not ridge-connected";
        return out;
    }
    for (int j = 0; j < m; ++j) out.cycle.add(j, T(sign[j]));
    if (!C.is_cycle(out.cycle)) {
        out.reason = "signed top-cell sum is not a relative cycle";
        out.cycle = Chain<T>(n);
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace symsq

#endif  // SYMSQ_MANIFOLDS_HPP
