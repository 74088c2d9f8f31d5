#pragma once

#include <stdexcept>
#include <string>

namespace quadwalk {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact algebra
struct ZeroDenominator : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };

// model loading
struct ParseError : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };
struct InvalidStep : Error { using Error::Error; };

// kernel geometry
struct DegenerateDirection : Error { using Error::Error; };
struct NonRealRoots : Error { using Error::Error; };
struct Multiplicity : Error { using Error::Error; };

// group engine
struct MissingStepDirection : Error { using Error::Error; };

// elliptic numerics
struct QuadratureFailure : Error { using Error::Error; };
struct NoValidBranch : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };

} // namespace quadwalk
