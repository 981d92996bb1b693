#pragma once

#include <stdexcept>
#include <string>

namespace lexdepth {

/** Root of the library error hierarchy. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Input violates a mathematical precondition of the requested operation. */
struct DomainError : Error {
    using Error::Error;
};

/** Input text could not be parsed. */
struct ParseError : Error {
    using Error::Error;
};

/** Completing the operation would exceed a configured resource limit. */
struct GuardrailError : Error {
    using Error::Error;
};

}  // namespace lexdepth
