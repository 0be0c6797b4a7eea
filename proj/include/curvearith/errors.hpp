#ifndef CURVEARITH_ERRORS_HPP
#define CURVEARITH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvearith {

// Error taxonomy; the CLI maps these onto exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or mathematically invalid input (exit code 2).
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// Evaluation of a function at a place where it has a pole.
struct PoleError : InvalidInputError {
    explicit PoleError(const std::string& msg) : InvalidInputError(msg) {}
};

// A query needs more cached precision than available at some place.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Enumeration or point-count limits exceeded, or wall-clock timeout (exit code 3).
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

struct TimeoutError : ResourceError {
    explicit TimeoutError(const std::string& msg) : ResourceError(msg) {}
};

// Relation collection made no progress for too long; advises larger
// factor basis or base divisor.
struct StallError : Error {
    explicit StallError(const std::string& msg) : Error(msg) {}
};

// A broken internal invariant (exit code 4).  Always a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace curvearith

#endif
