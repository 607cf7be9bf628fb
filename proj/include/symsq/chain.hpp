// Chains and chain complexes over Z or Z/2.
//
// A ChainComplex is an indexed family of free modules with sparse
// boundary columns; cells are opaque indices, so the same machinery
// serves simplicial, product, quotient, and Borel complexes.

#ifndef SYMSQ_CHAIN_HPP
#define SYMSQ_CHAIN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symsq/complex.hpp"
#include "symsq/errors.hpp"
#include "symsq/rings.hpp"
#include "symsq/snf.hpp"

namespace symsq {

/// Sparse formal sum of cells of one degree.  No zero coefficients are
/// stored; the map key order is the canonical cell order.
template <class T>
struct Chain {
    int degree = 0;
    std::map<int, T> terms;

    Chain() = default;
    explicit Chain(int k) : degree(k) {}

    void add(int cell, const T& coeff) {
        if (is_zero(coeff)) return;
        auto [it, inserted] = terms.emplace(cell, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    bool empty() const { return terms.empty(); }

    Chain operator+(const Chain& o) const {
        Chain out = *this;
        for (const auto& [c, g] : o.terms) out.add(c, g);
        return out;
    }
    Chain operator-(const Chain& o) const {
        Chain out = *this;
        for (const auto& [c, g] : o.terms) out.add(c, T(0) - g);
        return out;
    }
    Chain operator*(const T& s) const {
        Chain out(degree);
        for (const auto& [c, g] : terms) out.add(c, g * s);
        return out;
    }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

template <class T>
struct ChainComplex {
    /// sizes[k] = rank of the degree-k chain group.
    std::vector<int> sizes;
    /// d[k][j] = boundary of the j-th k-cell (k >= 1); d[0] is all-empty.
    std::vector<std::vector<SparseCol<T>>> d;

    int top() const { return static_cast<int>(sizes.size()) - 1; }

    int size(int k) const {
        if (k < 0 || k > top()) return 0;
        return sizes[k];
    }

    Chain<T> boundary(const Chain<T>& c) const {
        Chain<T> out(c.degree - 1);
        if (c.degree <= 0 || c.degree > top()) return out;
        for (const auto& [cell, g] : c.terms)
            for (const auto& [face, s] : d[c.degree][cell])
                out.add(face, g * s);
        return out;
    }

    bool is_cycle(const Chain<T>& c) const { return boundary(c).empty(); }

    /// d_{k} . d_{k+1} = 0, checked by enumeration.
    bool boundary_squares_to_zero() const {
        for (int k = 2; k <= top(); ++k)
            for (int j = 0; j < size(k); ++j) {
                Chain<T> c(k);
                c.add(j, T(1));
                if (!boundary(boundary(c)).empty()) return false;
            }
        return true;
    }

    /// Alternating sum of cell counts.
    long long euler_characteristic() const {
        long long chi = 0;
        for (int k = 0; k <= top(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(sizes[k]);
        return chi;
    }

    /// Dense boundary matrix of degree k (rows = (k-1)-cells).
    /// Out-of-range degrees give appropriately shaped zero matrices.
    std::vector<std::vector<T>> boundary_matrix(int k) const {
        int rows = size(k - 1), cols = size(k);
        std::vector<std::vector<T>> A(rows, std::vector<T>(cols, T(0)));
        if (k >= 1 && k <= top())
            for (int j = 0; j < cols; ++j)
                for (const auto& [r, s] : d[k][j]) A[r][j] = s;
        return A;
    }
};

/// The simplicial chain complex of K, absolute (A empty) or relative:
/// the basis is the canonical simplices of K not in A, with A-terms of
/// boundaries deleted.
template <class T>
struct SimplicialChains {
    const SimplicialComplex* K = nullptr;
    Subcomplex A;                                // may be empty
    ChainComplex<T> C;
    std::vector<std::vector<int>> rel_of_abs;    // [d][K-index] -> C-index or -1
    std::vector<std::vector<int>> abs_of_rel;    // [d][C-index] -> K-index

    const Simplex& cell(int d, int i) const {
        return K->cell(d, abs_of_rel[d][i]);
    }

    /// Chain from (coefficient, simplex) terms; terms lying in A are
    /// dropped (they are zero in the relative group).
    Chain<T> chain_from_terms(
        int degree, const std::vector<std::pair<T, Simplex>>& terms) const {
        Chain<T> c(degree);
        for (const auto& [g, s] : terms) {
            if (static_cast<int>(s.size()) - 1 != degree)
                throw InputError("chain term " + simplex_str(s) +
                                 " has the wrong degree");
            int abs = K->index_of(s);
            if (abs < 0)
                throw InputError("chain term " + simplex_str(s) +
                                 " is not a simplex of the complex");
            int rel = rel_of_abs[degree][abs];
            if (rel >= 0) c.add(rel, g);
        }
        return c;
    }

    /// A relative cycle: its boundary vanishes after deleting A-terms.
    bool is_relative_cycle(const Chain<T>& c) const { return C.is_cycle(c); }
};

template <class T>
SimplicialChains<T> relative_complex(const SimplicialComplex& K,
                                     const Subcomplex& A);

template <class T>
SimplicialChains<T> complex_of(const SimplicialComplex& K) {
    return relative_complex<T>(K, Subcomplex::empty(K));
}

template <class T>
SimplicialChains<T> relative_complex(const SimplicialComplex& K,
                                     const Subcomplex& A) {
    SimplicialChains<T> out;
    out.K = &K;
    out.A = A.flags().empty() ? Subcomplex::empty(K) : A;
    if (!out.A.is_closed(K))
        throw InputError("subcomplex is not closed under faces");
    const int top = K.dim();
    out.rel_of_abs.resize(top + 1);
    out.abs_of_rel.resize(top + 1);
    out.C.sizes.assign(top + 1, 0);
    out.C.d.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        out.rel_of_abs[d].assign(K.size(d), -1);
        for (int i = 0; i < K.size(d); ++i) {
            if (out.A.contains(d, i)) continue;
            out.rel_of_abs[d][i] = static_cast<int>(out.abs_of_rel[d].size());
            out.abs_of_rel[d].push_back(i);
        }
        out.C.sizes[d] = static_cast<int>(out.abs_of_rel[d].size());
    }
    for (int d = 1; d <= top; ++d) {
        out.C.d[d].resize(out.C.sizes[d]);
        for (int j = 0; j < out.C.sizes[d]; ++j) {
            const Simplex& s = K.cell(d, out.abs_of_rel[d][j]);
            SparseCol<T>& col = out.C.d[d][j];
            for (size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (size_t a = 0; a < s.size(); ++a)
                    if (a != i) face.push_back(s[a]);
                int abs = K.index_of(face);
                int rel = out.rel_of_abs[d - 1][abs];
                if (rel < 0) continue;  // A-term deleted
                col.emplace_back(rel, T(i % 2 == 0 ? 1 : -1));
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }
    return out;
}

/// Chain map induced by a simplicial map: degenerate images go to zero,
/// otherwise the image simplex with the sign of the sorting permutation.
template <class T>
Chain<T> apply_simplicial_map(const SimplicialMap& f,
                              const SimplicialChains<T>& dom,
                              const SimplicialChains<T>& cod,
                              const Chain<T>& c) {
    Chain<T> out(c.degree);
    for (const auto& [cell, g] : c.terms) {
        const Simplex& s = dom.cell(c.degree, cell);
        std::vector<int> img;
        img.reserve(s.size());
        for (int v : s) img.push_back(f(v));
        int sign = sort_sign(img);
        if (sign == 0) continue;
        int abs = cod.K->index_of(img);
        if (abs < 0)
            throw InputError("image simplex missing from codomain");
        int rel = cod.rel_of_abs[c.degree][abs];
        if (rel >= 0) out.add(rel, g * T(sign));
    }
    return out;
}

/// The subdivision chain map sd_# applied to a chain; relative terms of
/// the subdivided codomain (sd(A)) are dropped by the codomain data.
template <class T>
Chain<T> apply_subdivision(const Subdivision& sd,
                           const SimplicialChains<T>& dom,
                           const SimplicialChains<T>& cod,
                           const Chain<T>& c) {
    Chain<T> out(c.degree);
    for (const auto& [cell, g] : c.terms) {
        int abs = dom.abs_of_rel[c.degree][cell];
        for (const auto& [sign, piece] : sd.pieces[c.degree][abs]) {
            int pabs = cod.K->index_of(piece);
            int rel = cod.rel_of_abs[c.degree][pabs];
            if (rel >= 0) out.add(rel, g * T(sign));
        }
    }
    return out;
}

}  // namespace symsq

#endif  // SYMSQ_CHAIN_HPP
