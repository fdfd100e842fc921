#pragma once

#include "netpen/config.hpp"
#include "netpen/link/codec.hpp"
#include "netpen/link/transport.hpp"

#include <functional>
#include <memory>

namespace netpen::link {

struct SessionConfig {
    int heartbeat_interval_ms = 500;
    int heartbeat_timeout_ms = 3000;
    int request_timeout_ms = 3000;
    int loop_interval_ms = 0; // vehicle pacing; 0 runs flat out
};

SessionConfig session_config_from_file(const ConfigFile& cfg);

struct SessionOutcome {
    enum class Reason {
        Closed,           // peer closed or handlers signalled completion
        HeartbeatTimeout, // nothing received within heartbeat_timeout
        HandlerAbort,     // a handler threw
        TransportError,
    };
    Reason reason = Reason::Closed;
    size_t messages_received = 0;
    size_t frames_received = 0;
    size_t telemetry_received = 0;
    size_t commands_received = 0;
    size_t reports_received = 0;
    size_t decode_errors = 0;
};

const char* to_string(SessionOutcome::Reason reason);

/// Vehicle role: emits one VideoFrame + Telemetry per loop tick, consumes
/// VelocityCommand. next_frame returning nullopt ends the session.
struct VehicleSessionHandlers {
    std::function<std::optional<VideoFrame>()> next_frame;
    std::function<Telemetry()> next_telemetry;
    std::function<void(const VelocityCommand&)> on_command;
};

/// Topside role: consumes frames and telemetry, replies with commands and
/// DetectionReports (whatever on_frame returns is sent back).
struct TopsideSessionHandlers {
    std::function<std::vector<LinkMessage>(const VideoFrame&)> on_frame;
    std::function<void(const Telemetry&)> on_telemetry;
};

SessionOutcome run_session(Transport& transport, const VehicleSessionHandlers& handlers,
                           const SessionConfig& cfg);
SessionOutcome run_session(Transport& transport, const TopsideSessionHandlers& handlers,
                           const SessionConfig& cfg);

/// Lockstep client for the topside detection service: ships a frame, waits
/// for the matching DetectionReport. Telemetry is fire-and-forget. Throws
/// Error(Timeout / LinkClosed / FrameMismatch).
class DetectorClient {
public:
    DetectorClient(std::unique_ptr<Transport> transport, const SessionConfig& cfg);
    ~DetectorClient();

    std::vector<detect::Detection> request_detections(const Image& img, uint32_t frame_id);
    void send_telemetry(const Telemetry& telemetry);
    void close();

    /// Auto-numbered convenience used by the one-argument request call.
    uint32_t next_frame_id() { return frame_counter_++; }

private:
    std::unique_ptr<Transport> transport_;
    SessionConfig cfg_;
    StreamDecoder decoder_;
    uint32_t frame_counter_ = 0;
};

} // namespace netpen::link
