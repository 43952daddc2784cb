#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatcf {

enum class ErrorCode {
    ParseError,
    ZeroDivisor,
    NotIntegral,
    NotAnOrder,
    BadParameters,
    CannotSaturate,
    NotRamified,
    PreconditionViolated,
    InconsistentQuotients,
    NotAdmissible,
    SingularBn,
    NegativeInput,
    NotSplittable,
    AdmissibilityFailure,
    ScalarInput,
    MismatchError,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; the code says what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace quatcf
