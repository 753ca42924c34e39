// Error types thrown on contract violations. Every validation failure names
// the violated invariant in its message.
#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquareError : Error {
    using Error::Error;
};
struct NotHermitianError : Error {
    using Error::Error;
};
struct NotPsdError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct InvalidDistributionError : Error {
    using Error::Error;
};
struct OutOfRangeError : Error {
    using Error::Error;
};
struct InvalidStateError : Error {
    using Error::Error;
};
struct InvalidChannelError : Error {
    using Error::Error;
};
struct InvalidChoiError : Error {
    using Error::Error;
};
struct NotStochasticError : Error {
    using Error::Error;
};
struct NoSignChangeError : Error {
    using Error::Error;
};
struct SpecParseError : Error {
    using Error::Error;
};

} // namespace qcap
