// Exception hierarchy shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spbw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Presentation rejected: some c_ij vanishes or a tail monomial is not
// strictly below x_i*x_j in the declared order.
struct ValidationFailure : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

struct UnknownVariable : Error {
    using Error::Error;
};

struct UnverifiedInvolution : Error {
    using Error::Error;
};

// Raised when a product would exceed the global degree cap.
struct DegreeLimitExceeded : Error {
    using Error::Error;
};

struct NotExact : Error {
    using Error::Error;
};

struct NotFinite : Error {
    using Error::Error;
};

struct InvalidSplitting : Error {
    using Error::Error;
};

struct InvalidStabilization : Error {
    using Error::Error;
};

struct FoldFailed : Error {
    explicit FoldFailed(int step_index)
        : Error("fold failed at step " + std::to_string(step_index) +
                ": no right inverse, module is not stably free"),
          step(step_index) {}
    int step;
};

struct StabilizationFailed : Error {
    explicit StabilizationFailed(int loop_index)
        : Error("stabilization search exhausted at column step " +
                std::to_string(loop_index) +
                "; raise the degree bound or supply hints"),
          step(loop_index) {}
    int step;
};

struct NotStablyFree : Error {
    using Error::Error;
};

}  // namespace spbw
