#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct JacobiViolation : Error {
    JacobiViolation(int i, int j, int k, std::string msg)
        : Error(std::move(msg)), i(i), j(j), k(k) {}
    int i, j, k;
};
struct RepresentationMismatch : Error { using Error::Error; };
struct ModuleMismatch : Error { using Error::Error; };
struct NotADerivation : Error {
    NotADerivation(int actor, int u, int v, std::string msg)
        : Error(std::move(msg)), actor(actor), u(u), v(v) {}
    int actor, u, v;
};
struct NotInvariant : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct UnsupportedClass : Error { using Error::Error; };
struct UnsupportedRank : Error { using Error::Error; };
struct NotAModule : Error { using Error::Error; };
struct NotWeightDiagonalizable : Error { using Error::Error; };
struct IncompatibleActions : Error { using Error::Error; };
struct NotASemidirectProduct : Error { using Error::Error; };
struct UnsupportedLevi : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct ExternalDataRequired : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

}  // namespace liecoh
