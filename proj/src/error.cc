#include "slocc/error.h"

namespace slocc {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::AllZero:
            return "AllZero";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::ParityError:
            return "ParityError";
        case ErrorKind::TooFewQubits:
            return "TooFewQubits";
        case ErrorKind::SizeMismatch:
            return "SizeMismatch";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::BadArgs:
            return "BadArgs";
        case ErrorKind::IOError:
            return "IOError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace slocc
