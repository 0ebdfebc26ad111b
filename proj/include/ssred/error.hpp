#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssred {

enum class ErrorCode {
    InvalidArgument,
    FieldMismatch,
    DimensionMismatch,
    GeneratorCountMismatch,
    NotInvertible,
    LimitDoesNotExist,
    NotInUnipotentRadical,
    NotBlockDiagonal,
    NotNormal,
    AlgebraNotStable,
    PreconditionNotDestabilizable,
    Undecided,
    CertificateSearchExhausted,
    SearchSpaceExceeded,
    ResourceBoundExceeded,
    InternalInvariantViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` drives CLI exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ssred
