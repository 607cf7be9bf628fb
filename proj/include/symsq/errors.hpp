// Error hierarchy shared by the whole library.  The CLI maps these onto
// its exit-code contract (input 2, resource 3).

#ifndef SYMSQ_ERRORS_HPP
#define SYMSQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symsq {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad facet lists, non-face-closed subcomplexes,
/// ring mismatches, unparsable files.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Integer coefficients with odd degree: the swap is orientation
/// reversing in odd dimensions, so there is no canonical orientation
/// of the quotient cells.
struct ParityError : InputError {
    explicit ParityError(int degree)
        : InputError("parity error: ring Z requires even degree, got k = " +
                     std::to_string(degree) +
                     " (the coordinate swap is orientation reversing in odd "
                     "dimensions)") {}
};

/// A complex fails the combinatorial manifold stand-in (pure, ridge
/// condition, strong connectivity).
struct StructureError : Error {
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

/// Integral fundamental cycle requested on a non-orientable complex.
struct OrientationError : Error {
    explicit OrientationError(const std::string& msg) : Error(msg) {}
};

/// A precondition on chain data failed (e.g. a non-cycle where a cycle
/// is required).  Carries a short diagnostic.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Cell-count guard tripped while building a product or Borel complex.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

}  // namespace symsq

#endif  // SYMSQ_ERRORS_HPP
