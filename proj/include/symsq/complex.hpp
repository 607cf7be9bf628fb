// Finite abstract simplicial complexes, subcomplexes, simplicial maps,
// and barycentric subdivision with its chain-level comparison map.
//
// A simplex is stored once, as its strictly increasing vertex list;
// orientation signs live in chain coefficients, never in vertex order.
// Complexes are immutable after construction.

#ifndef SYMSQ_COMPLEX_HPP
#define SYMSQ_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symsq/errors.hpp"

namespace symsq {

using Simplex = std::vector<int>;  // strictly increasing vertex ids

inline std::string simplex_str(const Simplex& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

/// Sign of the permutation that sorts `v` ascending; 0 if `v` has a
/// repeated entry.
inline int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i) {
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    return sign;
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given facets.  Canonical cell order within a
    /// dimension is lexicographic on vertex lists.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets) {
        std::vector<std::set<Simplex>> by_dim;
        for (const Simplex& f : facets) {
            Simplex s = f;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InputError("duplicate vertex in facet " + simplex_str(f));
            if (s.empty()) throw InputError("empty facet");
            // enumerate all nonempty subsets
            const size_t n = s.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                Simplex face;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) face.push_back(s[i]);
                size_t d = face.size() - 1;
                if (by_dim.size() <= d) by_dim.resize(d + 1);
                by_dim[d].insert(std::move(face));
            }
        }
        SimplicialComplex K;
        K.cells_.resize(by_dim.size());
        K.index_.resize(by_dim.size());
        for (size_t d = 0; d < by_dim.size(); ++d) {
            K.cells_[d].assign(by_dim[d].begin(), by_dim[d].end());
            for (size_t i = 0; i < K.cells_[d].size(); ++i)
                K.index_[d][K.cells_[d][i]] = static_cast<int>(i);
        }
        return K;
    }

    int dim() const { return static_cast<int>(cells_.size()) - 1; }

    int size(int d) const {
        if (d < 0 || d > dim()) return 0;
        return static_cast<int>(cells_[d].size());
    }

    int total_cells() const {
        int n = 0;
        for (int d = 0; d <= dim(); ++d) n += size(d);
        return n;
    }

    const std::vector<Simplex>& cells(int d) const { return cells_[d]; }

    const Simplex& cell(int d, int i) const { return cells_[d][i]; }

    /// Index of a (sorted) simplex, or -1.
    int index_of(const Simplex& s) const {
        int d = static_cast<int>(s.size()) - 1;
        if (d < 0 || d > dim()) return -1;
        auto it = index_[d].find(s);
        return it == index_[d].end() ? -1 : it->second;
    }

    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    /// Facets = maximal simplices (any dimension).
    std::vector<std::pair<int, int>> facets() const {
        std::vector<std::pair<int, int>> out;
        for (int d = 0; d <= dim(); ++d)
            for (int i = 0; i < size(d); ++i)
                if (!has_proper_coface(d, i)) out.emplace_back(d, i);
        return out;
    }

    /// True if some strictly larger simplex of the complex contains (d,i).
    bool has_proper_coface(int d, int i) const {
        if (d + 1 > dim()) return false;
        const Simplex& s = cells_[d][i];
        for (const Simplex& t : cells_[d + 1])
            if (std::includes(t.begin(), t.end(), s.begin(), s.end()))
                return true;
        return false;
    }

    /// All facet-cofaces of each cell, as indices into `facets()`.
    /// Computed on demand by callers that need the diagonal test.
    std::vector<std::vector<std::vector<int>>> facet_cofaces(
        const std::vector<std::pair<int, int>>& facet_list) const {
        std::vector<std::vector<std::vector<int>>> cof(dim() + 1);
        for (int d = 0; d <= dim(); ++d) cof[d].resize(size(d));
        for (size_t f = 0; f < facet_list.size(); ++f) {
            auto [fd, fi] = facet_list[f];
            const Simplex& F = cells_[fd][fi];
            const size_t n = F.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                Simplex face;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) face.push_back(F[i]);
                int d = static_cast<int>(face.size()) - 1;
                cof[d][index_[d].at(face)].push_back(static_cast<int>(f));
            }
        }
        return cof;
    }

private:
    std::vector<std::vector<Simplex>> cells_;     // by dimension, lex order
    std::vector<std::map<Simplex, int>> index_;   // by dimension
};

inline SimplicialComplex build_complex(const std::vector<Simplex>& facets) {
    return SimplicialComplex::from_facets(facets);
}

/// A face-closed subset of a parent complex, stored as membership flags
/// aligned with the parent's canonical cell order.
class Subcomplex {
public:
    Subcomplex() = default;

    /// Empty subcomplex of `K`.
    static Subcomplex empty(const SimplicialComplex& K) {
        Subcomplex A;
        A.flags_.resize(K.dim() + 1);
        for (int d = 0; d <= K.dim(); ++d) A.flags_[d].assign(K.size(d), 0);
        return A;
    }

    /// Face closure of `facets`, which must all be simplices of `K`.
    static Subcomplex from_facets(const SimplicialComplex& K,
                                  const std::vector<Simplex>& facets) {
        Subcomplex A = empty(K);
        for (const Simplex& f : facets) {
            Simplex s = f;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InputError("duplicate vertex in subcomplex facet " +
                                 simplex_str(f));
            const size_t n = s.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                Simplex face;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) face.push_back(s[i]);
                int idx = K.index_of(face);
                if (idx < 0)
                    throw InputError("subcomplex facet " + simplex_str(f) +
                                     " is not a simplex of the parent complex");
                A.flags_[face.size() - 1][idx] = 1;
            }
        }
        return A;
    }

    /// Closed under faces within the parent complex.
    bool is_closed(const SimplicialComplex& K) const {
        for (int d = 1; d < static_cast<int>(flags_.size()); ++d)
            for (int i = 0; i < static_cast<int>(flags_[d].size()); ++i) {
                if (!flags_[d][i]) continue;
                const Simplex& s = K.cell(d, i);
                for (size_t l = 0; l < s.size(); ++l) {
                    Simplex f;
                    for (size_t a = 0; a < s.size(); ++a)
                        if (a != l) f.push_back(s[a]);
                    if (!contains(d - 1, K.index_of(f))) return false;
                }
            }
        return true;
    }

    bool contains(int d, int i) const {
        if (d < 0 || d >= static_cast<int>(flags_.size())) return false;
        return flags_[d][i] != 0;
    }

    bool is_empty() const {
        for (const auto& row : flags_)
            for (char c : row)
                if (c) return false;
        return true;
    }

    int size(int d) const {
        if (d < 0 || d >= static_cast<int>(flags_.size())) return 0;
        int n = 0;
        for (char c : flags_[d]) n += (c != 0);
        return n;
    }

    std::vector<std::vector<char>>& flags() { return flags_; }
    const std::vector<std::vector<char>>& flags() const { return flags_; }

private:
    std::vector<std::vector<char>> flags_;
};

/// A simplicial map, given by a total assignment on the vertex ids of
/// the domain.  The image of every simplex must span a simplex of the
/// codomain (degenerate images are allowed; they induce zero on chains).
struct SimplicialMap {
    const SimplicialComplex* domain = nullptr;
    const SimplicialComplex* codomain = nullptr;
    std::map<int, int> vertex_image;

    SimplicialMap() = default;
    SimplicialMap(const SimplicialComplex& dom, const SimplicialComplex& cod,
                  std::map<int, int> vmap)
        : domain(&dom), codomain(&cod), vertex_image(std::move(vmap)) {
        validate();
    }

    int operator()(int v) const {
        auto it = vertex_image.find(v);
        if (it == vertex_image.end())
            throw InputError("simplicial map has no image for vertex " +
                             std::to_string(v));
        return it->second;
    }

    /// Image vertex set of a simplex, sorted with duplicates removed.
    Simplex image_simplex(const Simplex& s) const {
        Simplex img;
        img.reserve(s.size());
        for (int v : s) img.push_back((*this)(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }

    void validate() const {
        for (int d = 0; d <= domain->dim(); ++d)
            for (const Simplex& s : domain->cells(d)) {
                Simplex img = image_simplex(s);
                if (!codomain->contains(img))
                    throw InputError(
                        "simplicial map: image of " + simplex_str(s) + " = " +
                        simplex_str(img) + " is not a simplex of the codomain");
            }
    }
};

/// Barycentric subdivision.  Vertices of sd(K) are the simplices of K
/// (flattened ids, ordered by (dimension, lexicographic index), so that
/// increasing sd-vertex id means non-decreasing face dimension);
/// simplices of sd(K) are flags of proper faces.
struct Subdivision {
    SimplicialComplex complex;         // sd(K)
    const SimplicialComplex* base = nullptr;
    std::vector<int> offset;           // sd-vertex id = offset[d] + index

    /// Chain-map pieces: pieces[d][i] lists (sign, sd-simplex) for the
    /// i-th d-cell of the base; there are d! + ... exactly (d+1)! terms.
    std::vector<std::vector<std::vector<std::pair<int, Simplex>>>> pieces;

    int vertex_of(int d, int i) const { return offset[d] + i; }

    /// Base simplex of an sd-vertex id.
    std::pair<int, int> base_cell_of_vertex(int sdv) const {
        int d = 0;
        while (d + 1 < static_cast<int>(offset.size()) && sdv >= offset[d + 1])
            ++d;
        return {d, sdv - offset[d]};
    }

    /// Dimension of the top (largest) base simplex in an sd-simplex.
    std::pair<int, int> top_base_cell(const Simplex& sd_simplex) const {
        return base_cell_of_vertex(sd_simplex.back());
    }

    /// sd(A) as a subcomplex of sd(K): flags whose members all lie in A.
    Subcomplex image(const Subcomplex& A) const {
        Subcomplex B = Subcomplex::empty(complex);
        for (int d = 0; d <= complex.dim(); ++d)
            for (int i = 0; i < complex.size(d); ++i) {
                bool in = true;
                for (int v : complex.cell(d, i)) {
                    auto [bd, bi] = base_cell_of_vertex(v);
                    if (!A.contains(bd, bi)) { in = false; break; }
                }
                B.flags()[d][i] = in;
            }
        return B;
    }
};

namespace detail {

/// Enumerate the signed top pieces of the subdivision of one simplex:
/// permutations pi of its vertices give flags {v_pi(0)} c {v_pi(0),
/// v_pi(1)} c ... with sign sgn(pi).
inline void subdivision_pieces(const SimplicialComplex& K, const Simplex& s,
                               const Subdivision& sd,
                               std::vector<std::pair<int, Simplex>>& out) {
    const int k = static_cast<int>(s.size()) - 1;
    std::vector<int> perm(k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign of perm
        int sign = 1;
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                if (perm[a] > perm[b]) sign = -sign;
        Simplex piece;
        Simplex prefix;
        for (int j = 0; j <= k; ++j) {
            prefix.push_back(s[perm[j]]);
            Simplex face = prefix;
            std::sort(face.begin(), face.end());
            int idx = K.index_of(face);
            piece.push_back(sd.vertex_of(j, idx));
        }
        // piece is increasing by construction (vertex ids grow with dim)
        out.emplace_back(sign, std::move(piece));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

inline Subdivision barycentric_subdivision(const SimplicialComplex& K) {
    Subdivision sd;
    sd.base = &K;
    sd.offset.resize(K.dim() + 1, 0);
    for (int d = 1; d <= K.dim(); ++d)
        sd.offset[d] = sd.offset[d - 1] + K.size(d - 1);

    // facets of sd(K) = full flags of facets of K
    std::vector<Simplex> sd_facets;
    for (auto [fd, fi] : K.facets()) {
        const Simplex& F = K.cell(fd, fi);
        std::vector<int> perm(F.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Simplex flag;
            Simplex prefix;
            for (size_t j = 0; j < F.size(); ++j) {
                prefix.push_back(F[perm[j]]);
                Simplex face = prefix;
                std::sort(face.begin(), face.end());
                flag.push_back(sd.vertex_of(static_cast<int>(j),
                                            K.index_of(face)));
            }
            sd_facets.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.complex = SimplicialComplex::from_facets(sd_facets);

    sd.pieces.resize(K.dim() + 1);
    for (int d = 0; d <= K.dim(); ++d) {
        sd.pieces[d].resize(K.size(d));
        for (int i = 0; i < K.size(d); ++i)
            detail::subdivision_pieces(K, K.cell(d, i), sd, sd.pieces[d][i]);
    }
    return sd;
}

/// Subdivided simplicial map sd(f): sd(Y) -> sd(X), sending the
/// barycenter of a simplex s to the barycenter of f(s).
inline SimplicialMap subdivide_map(const SimplicialMap& f,
                                   const Subdivision& sd_dom,
                                   const Subdivision& sd_cod) {
    std::map<int, int> vmap;
    for (int d = 0; d <= f.domain->dim(); ++d)
        for (int i = 0; i < f.domain->size(d); ++i) {
            Simplex img = f.image_simplex(f.domain->cell(d, i));
            int jd = static_cast<int>(img.size()) - 1;
            vmap[sd_dom.vertex_of(d, i)] =
                sd_cod.vertex_of(jd, f.codomain->index_of(img));
        }
    return SimplicialMap(sd_dom.complex, sd_cod.complex, std::move(vmap));
}

}  // namespace symsq

#endif  // SYMSQ_COMPLEX_HPP
