// Coefficient rings: Z (arbitrary precision) and Z/2.
//
// All chain-level code is templated on the coefficient type; Smith
// normal form uses the same elimination routine for both (over a field
// every division is exact, so the remainder loop terminates at once).

#ifndef SYMSQ_RINGS_HPP
#define SYMSQ_RINGS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace symsq {

using Int = boost::multiprecision::cpp_int;

/// The field with two elements.
struct GF2 {
    unsigned char v = 0;
    constexpr GF2() = default;
    constexpr GF2(long long n) : v(static_cast<unsigned char>(n & 1)) {}

    friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    friend constexpr GF2 operator/(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    constexpr GF2 operator-() const { return *this; }
    GF2& operator+=(GF2 b) { v ^= b.v; return *this; }
    GF2& operator-=(GF2 b) { v ^= b.v; return *this; }
    GF2& operator*=(GF2 b) { v &= b.v; return *this; }
    friend constexpr bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
    friend constexpr bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

template <class T>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static constexpr bool is_field = false;
    static std::string name() { return "Z"; }
    /// true if |a| < |b| (pivot preference).
    static bool abs_less(const Int& a, const Int& b) {
        return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
    }
};

template <>
struct RingTraits<GF2> {
    static constexpr bool is_field = true;
    static std::string name() { return "Z2"; }
    static bool abs_less(GF2, GF2) { return false; }  // all nonzero units
};

template <class T>
inline bool is_zero(const T& t) { return t == T(0); }

}  // namespace symsq

#endif  // SYMSQ_RINGS_HPP
