#pragma once

#include "netpen/detect/detection.hpp"
#include "netpen/image.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace netpen::link {

enum class MsgType : uint8_t {
    VideoFrame = 0x01,
    VelocityCommand = 0x02,
    Telemetry = 0x03,
    DetectionReport = 0x04,
    Heartbeat = 0x05,
};

struct VideoFrame {
    uint32_t frame_id = 0;
    uint16_t width = 0;
    uint16_t height = 0;
    std::vector<uint8_t> pixels; // row-major 8-bit grayscale, no compression

    bool operator==(const VideoFrame&) const = default;
};

struct VelocityCommand {
    float surge = 0.f;
    float sway = 0.f;
    float heave = 0.f;
    float yaw_rate = 0.f;

    bool operator==(const VelocityCommand&) const = default;
};

struct Telemetry {
    float depth = 0.f;   // meters, >= 0
    float heading = 0.f; // radians
    std::optional<float> est_distance; // meters
    uint8_t phase = 0;   // mission phase code
    uint32_t frame_id = 0;

    bool operator==(const Telemetry&) const = default;
};

struct DetectionReport {
    uint32_t frame_id = 0;
    std::vector<detect::Detection> detections;

    bool operator==(const DetectionReport&) const = default;
};

struct Heartbeat {
    bool operator==(const Heartbeat&) const = default;
};

using LinkMessage =
    std::variant<VideoFrame, VelocityCommand, Telemetry, DetectionReport, Heartbeat>;

MsgType message_type(const LinkMessage& msg);

} // namespace netpen::link
