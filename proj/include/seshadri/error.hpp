#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    DimensionMismatch,
    DegenerateSlice,
    ValueMismatch,
    NotFano,
    Unsupported,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; the code
/// survives the trip through the C API as a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const char* message) {
    if (!condition)
        throw Error(code, message);
}

} // namespace seshadri
