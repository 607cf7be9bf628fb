// Homology of a chain complex from Smith normal form, with
// representative cycles and a coordinate map on cycles, plus boundary
// membership tests (classes_equal).

#ifndef SYMSQ_HOMOLOGY_HPP
#define SYMSQ_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/errors.hpp"
#include "symsq/snf.hpp"

namespace symsq {

/// Coordinates of a cycle's class: one entry per free generator and one
/// residue per torsion generator (reduced mod the torsion order).
template <class T>
struct ClassCoordinates {
    std::vector<T> free;
    std::vector<T> torsion;

    bool is_zero() const {
        for (const T& t : free)
            if (!is_zero_coeff(t)) return false;
        for (const T& t : torsion)
            if (!is_zero_coeff(t)) return false;
        return true;
    }

private:
    static bool is_zero_coeff(const T& t) { return t == T(0); }
};

template <class T>
class HomologyResult {
public:
    int degree = 0;
    int betti = 0;
    std::vector<Int> torsion;             // each > 1, divisibility chain
    std::vector<Chain<T>> free_reps;      // one cycle per free generator
    std::vector<Chain<T>> torsion_reps;   // one cycle per torsion generator

    /// Total on cycles; throws PreconditionError on a non-cycle.
    ClassCoordinates<T> coordinates(const Chain<T>& cycle) const {
        std::vector<T> kc = kernel_coordinates(cycle);
        // h = Uminv * kc
        int z = static_cast<int>(kc.size());
        std::vector<T> h(z, T(0));
        for (int i = 0; i < z; ++i)
            for (int j = 0; j < z; ++j)
                if (!is_zero(Uminv_[i][j])) h[i] += Uminv_[i][j] * kc[j];
        ClassCoordinates<T> out;
        for (int i = rank_b_; i < z; ++i) out.free.push_back(h[i]);
        for (int i = 0; i < rank_b_; ++i) {
            if (factor_is_unit_[i]) continue;
            out.torsion.push_back(reduce_mod(h[i], torsion_order_[i]));
        }
        return out;
    }

    bool is_zero_class(const Chain<T>& cycle) const {
        return coordinates(cycle).is_zero();
    }

    // --- construction ------------------------------------------------

    static HomologyResult compute(const ChainComplex<T>& C, int k) {
        HomologyResult H;
        H.degree = k;
        if (k < 0 || k > C.top()) return H;  // empty group
        Matrix<T> A = C.boundary_matrix(k);
        Matrix<T> B = C.boundary_matrix(k + 1);
        int n_k = C.size(k);
        SNFResult<T> sa = smith_normal_form(A);
        // with no (k-1)-cells the boundary map is zero and the SNF of
        // the 0-row matrix carries no column transforms
        const bool trivial_d = (k == 0) || C.size(k - 1) == 0;
        int ra = trivial_d ? 0 : sa.rank;
        int z = n_k - ra;  // cycle rank
        H.ra_ = ra;
        H.Va_ = trivial_d ? identity_matrix<T>(n_k) : sa.V;
        Matrix<T> Vainv = trivial_d ? identity_matrix<T>(n_k) : sa.Vinv;

        // boundaries expressed in kernel coordinates
        int n_k1 = C.size(k + 1);
        Matrix<T> M(z, std::vector<T>(n_k1, T(0)));
        for (int col = 0; col < n_k1; ++col) {
            std::vector<T> b(n_k, T(0));
            for (int r = 0; r < n_k; ++r) b[r] = B[r][col];
            std::vector<T> x = mul(H.Va_, b);
            for (int i = 0; i < z; ++i) M[i][col] = x[ra + i];
        }
        SNFResult<T> sm = smith_normal_form(M);
        H.rank_b_ = sm.rank;
        H.Uminv_ = z ? sm.Uinv : Matrix<T>{};
        H.betti = z - sm.rank;
        H.factor_is_unit_.assign(sm.rank, true);
        H.torsion_order_.assign(sm.rank, T(0));
        for (int i = 0; i < sm.rank; ++i) {
            if constexpr (RingTraits<T>::is_field) {
                continue;  // all units
            } else {
                if (sm.diag[i] > T(1)) {
                    H.factor_is_unit_[i] = false;
                    H.torsion_order_[i] = sm.diag[i];
                    H.torsion.push_back(Int(sm.diag[i]));
                }
            }
        }
        // representatives: kernel coords of generator i are column i of Um
        Matrix<T> KB(n_k, std::vector<T>(z, T(0)));  // kernel basis matrix
        for (int r = 0; r < n_k; ++r)
            for (int i = 0; i < z; ++i) KB[r][i] = Vainv[r][ra + i];
        auto rep_for = [&](int gen) {
            Chain<T> rep(k);
            for (int r = 0; r < n_k; ++r) {
                T coeff(0);
                for (int i = 0; i < z; ++i)
                    if (!is_zero(sm.U[i][gen]))
                        coeff += KB[r][i] * sm.U[i][gen];
                rep.add(r, coeff);
            }
            return rep;
        };
        for (int i = sm.rank; i < z; ++i) H.free_reps.push_back(rep_for(i));
        for (int i = 0; i < sm.rank; ++i)
            if (!H.factor_is_unit_[i]) H.torsion_reps.push_back(rep_for(i));
        return H;
    }

private:
    int ra_ = 0;       // rank of d_k
    int rank_b_ = 0;   // rank of the boundary lattice inside the cycles
    Matrix<T> Va_;     // SNF column transform of d_k
    Matrix<T> Uminv_;  // inverse row transform of the boundary lattice
    std::vector<char> factor_is_unit_;
    std::vector<T> torsion_order_;

    static std::vector<T> mul(const Matrix<T>& M, const std::vector<T>& v) {
        std::vector<T> out(M.size(), T(0));
        for (size_t i = 0; i < M.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j)
                if (!is_zero(M[i][j])) out[i] += M[i][j] * v[j];
        return out;
    }

    std::vector<T> kernel_coordinates(const Chain<T>& cycle) const {
        int n = static_cast<int>(Va_.size());
        std::vector<T> c(n, T(0));
        for (const auto& [cell, g] : cycle.terms) c[cell] = g;
        std::vector<T> x = mul(Va_, c);
        for (int j = 0; j < ra_; ++j)
            if (!is_zero(x[j]))
                throw PreconditionError(
                    "coordinate map applied to a non-cycle in degree " +
                    std::to_string(degree));
        return std::vector<T>(x.begin() + ra_, x.end());
    }

    static T reduce_mod(const T& a, const T& d) {
        if constexpr (RingTraits<T>::is_field) {
            return a;
        } else {
            T r = a - (a / d) * d;
            if (r < T(0)) r += d;
            return r;
        }
    }
};

template <class T>
HomologyResult<T> homology(const ChainComplex<T>& C, int k) {
    return HomologyResult<T>::compute(C, k);
}

namespace detail {

template <class T>
std::string chain_str(const Chain<T>& c) {
    std::string s = "{";
    bool first = true;
    for (const auto& [cell, g] : c.terms) {
        if (!first) s += ", ";
        first = false;
        s += "#" + std::to_string(cell);
    }
    return s + "}";
}

}  // namespace detail

/// True iff z1 - z2 bounds in degree k of C.  Both inputs must be
/// cycles; a non-cycle raises PreconditionError carrying its boundary.
template <class T>
bool classes_equal(const ChainComplex<T>& C, int k, const Chain<T>& z1,
                   const Chain<T>& z2) {
    for (const Chain<T>* z : {&z1, &z2}) {
        Chain<T> dz = C.boundary(*z);
        if (!dz.empty())
            throw PreconditionError(
                "classes_equal: input is not a cycle; boundary supported on " +
                detail::chain_str(dz));
    }
    Chain<T> diff = z1 - z2;
    if (diff.empty()) return true;
    if (k + 1 > C.top() || C.size(k + 1) == 0) return false;  // no boundaries
    Matrix<T> B = C.boundary_matrix(k + 1);
    SNFResult<T> s = smith_normal_form(B);
    std::vector<T> b(C.size(k), T(0));
    for (const auto& [cell, g] : diff.terms) b[cell] = g;
    std::vector<T> y = s.apply_Uinv(b);
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        if (i < s.rank) {
            T r = y[i] - (y[i] / s.diag[i]) * s.diag[i];
            if (!is_zero(r)) return false;
        } else if (!is_zero(y[i])) {
            return false;
        }
    }
    return true;
}

/// Betti number over the coefficient field/ring rank, computed with the
/// sparse elimination path (no transforms); suitable for large
/// complexes when only ranks are needed.
template <class T>
int betti_sparse(const ChainComplex<T>& C, int k) {
    if (k < 0 || k > C.top()) return 0;
    int rk = (k >= 1) ? sparse_rank<T>(C.d[k], C.size(k - 1)) : 0;
    int rk1 = (k + 1 <= C.top()) ? sparse_rank<T>(C.d[k + 1], C.size(k)) : 0;
    return C.size(k) - rk - rk1;
}

}  // namespace symsq

#endif  // SYMSQ_HOMOLOGY_HPP
