#pragma once

#include <stdexcept>
#include <string>

namespace netpen {

enum class ErrorCode {
    InvalidConfig,
    DegenerateObservation,
    NoPeriodicity,
    ShapeMismatch,
    OversizePayload,
    Timeout,
    LinkClosed,
    FrameMismatch,
    IoFailure,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code plus context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace netpen
