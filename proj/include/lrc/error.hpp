#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// Raised for domain errors: bad parameters, violated hypotheses, malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search would exceed its configured work cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace lrc
