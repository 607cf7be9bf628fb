// Shared fixture data for the test suite.

#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"

namespace fx {

inline std::string path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline symsq::SimplicialComplex hexagon() {
    return symsq::build_complex(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

inline symsq::SimplicialComplex octahedron() {
    return symsq::build_complex({{0, 2, 4},
                                 {0, 2, 5},
                                 {0, 3, 4},
                                 {0, 3, 5},
                                 {1, 2, 4},
                                 {1, 2, 5},
                                 {1, 3, 4},
                                 {1, 3, 5}});
}

inline symsq::SimplicialComplex rp2() {
    return symsq::build_complex({{0, 1, 2},
                                 {0, 1, 3},
                                 {0, 2, 4},
                                 {0, 3, 5},
                                 {0, 4, 5},
                                 {1, 2, 5},
                                 {1, 3, 4},
                                 {1, 4, 5},
                                 {2, 3, 4},
                                 {2, 3, 5}});
}

inline symsq::SimplicialComplex hollow_triangle() {
    return symsq::build_complex({{0, 1}, {1, 2}, {0, 2}});
}

// hexagon boundary at the bottom (0..5), top (6..11)
inline symsq::SimplicialComplex cylinder() {
    std::vector<symsq::Simplex> f;
    for (int i = 0; i < 6; ++i) {
        int j = (i + 1) % 6;
        f.push_back({i, j, j + 6});
        f.push_back({i, i + 6, j + 6});
    }
    return symsq::build_complex(f);
}

// cone over the octahedron with apex 6: a solid 3-ball
inline symsq::SimplicialComplex octahedron_cone() {
    std::vector<symsq::Simplex> f;
    for (symsq::Simplex s : {symsq::Simplex{0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                             {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4},
                             {1, 3, 5}}) {
        s.push_back(6);
        f.push_back(s);
    }
    return symsq::build_complex(f);
}

template <class T>
symsq::Chain<T> hexagon_fc(const symsq::SimplicialChains<T>& XA) {
    return XA.chain_from_terms(1, {{T(1), {0, 1}},
                                   {T(1), {1, 2}},
                                   {T(1), {2, 3}},
                                   {T(1), {3, 4}},
                                   {T(1), {4, 5}},
                                   {T(-1), {0, 5}}});
}

template <class T>
symsq::Chain<T> octahedron_fc(const symsq::SimplicialChains<T>& XA) {
    return XA.chain_from_terms(2, {{T(1), {0, 2, 4}},
                                   {T(-1), {0, 2, 5}},
                                   {T(-1), {0, 3, 4}},
                                   {T(1), {0, 3, 5}},
                                   {T(-1), {1, 2, 4}},
                                   {T(1), {1, 2, 5}},
                                   {T(1), {1, 3, 4}},
                                   {T(-1), {1, 3, 5}}});
}

}  // namespace fx

#endif  // TESTS_FIXTURES_HPP
