#pragma once

#include <stdexcept>
#include <string>

namespace gcr {

enum class ErrorCode {
    invalid_argument,
    parse,
    precondition,
    state_cap,
    no_convergence,
    illegal_action,
    not_found,
    internal,
};

/// Library-wide exception. `code()` maps 1:1 onto the C API status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace gcr
