#pragma once

#include <stdexcept>
#include <string>

namespace nilcoh {

// Error taxonomy mirrors the CLI exit codes: validation/user errors exit 1,
// internal inconsistencies (a proved statement failed to verify) exit 2.
enum class ErrorKind {
    validation,            // bad input, precondition violation, parse error
    degenerate_parameter,  // deformation parameter where the family degenerates
    internal_inconsistency // a theorem-backed assertion failed: implementation bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

[[noreturn]] inline void fail_validation(const std::string& msg) { fail(ErrorKind::validation, msg); }

[[noreturn]] inline void fail_internal(const std::string& msg) {
    fail(ErrorKind::internal_inconsistency, msg);
}

} // namespace nilcoh
