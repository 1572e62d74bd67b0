#pragma once

#include <stdexcept>
#include <string>

namespace flipchow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter validation failures (exit code 2 at the CLI).
struct ParamError : Error {
    using Error::Error;
};

struct GenusTooSmall : ParamError {
    explicit GenusTooSmall(int g)
        : ParamError("GenusTooSmall: g = " + std::to_string(g) + " violates g >= 2") {}
};

struct EvenDegree : ParamError {
    explicit EvenDegree(int d)
        : ParamError("EvenDegree: d = " + std::to_string(d) + " must be odd") {}
};

struct DegreeTooSmall : ParamError {
    DegreeTooSmall(int w, int bound)
        : ParamError("DegreeTooSmall: w = " + std::to_string(w) + " violates w >= 2g-2 = " +
                     std::to_string(bound)) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Nonzero remainder in a division that the split surjection guarantees exact.
struct InexactDivision : Error {
    using Error::Error;
};

struct NegativeBettiNumber : Error {
    using Error::Error;
};

}  // namespace flipchow
