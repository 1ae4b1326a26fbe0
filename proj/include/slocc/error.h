#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

enum class ErrorKind {
    LengthMismatch,
    AllZero,
    IndexOutOfRange,
    ParityError,
    TooFewQubits,
    SizeMismatch,
    ParseError,
    BadArgs,
    IOError,
};

const char *error_kind_name(ErrorKind kind);

/// Thrown by every library entry point on a contract violation.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace slocc
