#pragma once

#include <stdexcept>
#include <string>

namespace latticemap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input: bad dimensions, out-of-range parameters
struct InvalidArgument : Error {
    using Error::Error;
};

// matrix dimension or enumeration count above the configured cap
struct SizeCapError : Error {
    using Error::Error;
};

// poles, vanishing denominators, off-curve weights, non-convergence
struct DomainError : Error {
    using Error::Error;
};

// an internal consistency check did not hold
struct CheckFailed : Error {
    using Error::Error;
};

}  // namespace latticemap
