#pragma once

#include <stdexcept>
#include <string>

namespace pga {

enum class ErrorCode {
    InvalidArgument = 1,
    UnsupportedPrime = 2,
    NotAdmissible = 3,
    NotPropertyP = 4,
    BoundExceeded = 5,
    Parse = 6,
    NotFound = 7,
    Unsupported = 8,
    Internal = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace pga
