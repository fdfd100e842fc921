#include "netpen/error.hpp"

namespace netpen {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidConfig: return "invalid-config";
        case ErrorCode::DegenerateObservation: return "degenerate-observation";
        case ErrorCode::NoPeriodicity: return "no-periodicity";
        case ErrorCode::ShapeMismatch: return "shape-mismatch";
        case ErrorCode::OversizePayload: return "oversize-payload";
        case ErrorCode::Timeout: return "timeout";
        case ErrorCode::LinkClosed: return "link-closed";
        case ErrorCode::FrameMismatch: return "mismatched-frame-id";
        case ErrorCode::IoFailure: return "io-failure";
    }
    return "unknown-error";
}

} // namespace netpen
