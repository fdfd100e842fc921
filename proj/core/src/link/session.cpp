#include "netpen/link/session.hpp"

#include "netpen/error.hpp"

#include <chrono>

namespace netpen::link {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

void send_frame(Transport& transport, const LinkMessage& msg) {
    std::vector<uint8_t> bytes = encode_message(msg);
    transport.send(bytes.data(), bytes.size());
}

void count_message(SessionOutcome& outcome, const LinkMessage& msg) {
    outcome.messages_received++;
    switch (message_type(msg)) {
        case MsgType::VideoFrame: outcome.frames_received++; break;
        case MsgType::Telemetry: outcome.telemetry_received++; break;
        case MsgType::VelocityCommand: outcome.commands_received++; break;
        case MsgType::DetectionReport: outcome.reports_received++; break;
        case MsgType::Heartbeat: break;
    }
}

// Shared receive/heartbeat plumbing for both roles. dispatch() handles one
// message; returning false ends the session cleanly.
template <typename Dispatch, typename Idle>
SessionOutcome session_loop(Transport& transport, const SessionConfig& cfg, Dispatch&& dispatch,
                            Idle&& idle) {
    SessionOutcome outcome;
    StreamDecoder decoder;
    uint8_t buf[4096];
    auto last_rx = Clock::now();
    auto last_tx = Clock::now();

    try {
        for (;;) {
            if (!idle(last_tx)) return outcome; // role-specific emissions

            std::optional<size_t> got = transport.receive(buf, sizeof(buf), 20);
            if (got.has_value()) {
                if (*got == 0) {
                    outcome.reason = SessionOutcome::Reason::Closed;
                    return outcome;
                }
                last_rx = Clock::now();
                std::vector<DecodeEvent> events;
                decoder.feed(buf, *got, events);
                for (DecodeEvent& ev : events) {
                    if (std::holds_alternative<DecodeError>(ev)) {
                        outcome.decode_errors++;
                        continue;
                    }
                    LinkMessage& msg = std::get<LinkMessage>(ev);
                    count_message(outcome, msg);
                    if (!dispatch(msg, last_tx)) {
                        outcome.reason = SessionOutcome::Reason::Closed;
                        return outcome;
                    }
                }
            }
            if (ms_since(last_rx) >= cfg.heartbeat_timeout_ms) {
                outcome.reason = SessionOutcome::Reason::HeartbeatTimeout;
                return outcome;
            }
            if (ms_since(last_tx) >= cfg.heartbeat_interval_ms) {
                send_frame(transport, LinkMessage{Heartbeat{}});
                last_tx = Clock::now();
            }
        }
    } catch (const Error&) {
        outcome.reason = transport.is_open() ? SessionOutcome::Reason::HandlerAbort
                                             : SessionOutcome::Reason::TransportError;
        return outcome;
    }
}

} // namespace

const char* to_string(SessionOutcome::Reason reason) {
    switch (reason) {
        case SessionOutcome::Reason::Closed: return "closed";
        case SessionOutcome::Reason::HeartbeatTimeout: return "heartbeat-timeout";
        case SessionOutcome::Reason::HandlerAbort: return "handler-abort";
        case SessionOutcome::Reason::TransportError: return "transport-error";
    }
    return "unknown";
}

SessionConfig session_config_from_file(const ConfigFile& cfg) {
    SessionConfig s;
    s.heartbeat_interval_ms = static_cast<int>(
        cfg.get_int("link", "heartbeat_interval_ms", s.heartbeat_interval_ms));
    s.heartbeat_timeout_ms =
        static_cast<int>(cfg.get_int("link", "heartbeat_timeout_ms", s.heartbeat_timeout_ms));
    s.request_timeout_ms =
        static_cast<int>(cfg.get_int("link", "request_timeout_ms", s.request_timeout_ms));
    s.loop_interval_ms =
        static_cast<int>(cfg.get_int("link", "loop_interval_ms", s.loop_interval_ms));
    return s;
}

SessionOutcome run_session(Transport& transport, const VehicleSessionHandlers& handlers,
                           const SessionConfig& cfg) {
    auto last_emit = Clock::now() - std::chrono::hours(1);
    bool done = false;
    auto idle = [&](Clock::time_point& last_tx) {
        if (done) return false;
        if (ms_since(last_emit) < cfg.loop_interval_ms) return true;
        std::optional<VideoFrame> frame = handlers.next_frame();
        if (!frame) {
            done = true;
            return false;
        }
        send_frame(transport, LinkMessage{std::move(*frame)});
        send_frame(transport, LinkMessage{handlers.next_telemetry()});
        last_tx = Clock::now();
        last_emit = last_tx;
        return true;
    };
    auto dispatch = [&](LinkMessage& msg, Clock::time_point&) {
        if (auto* cmd = std::get_if<VelocityCommand>(&msg); cmd && handlers.on_command)
            handlers.on_command(*cmd);
        return true;
    };
    return session_loop(transport, cfg, dispatch, idle);
}

SessionOutcome run_session(Transport& transport, const TopsideSessionHandlers& handlers,
                           const SessionConfig& cfg) {
    auto idle = [](Clock::time_point&) { return true; };
    auto dispatch = [&](LinkMessage& msg, Clock::time_point& last_tx) {
        if (auto* frame = std::get_if<VideoFrame>(&msg)) {
            if (handlers.on_frame) {
                for (const LinkMessage& reply : handlers.on_frame(*frame)) {
                    send_frame(transport, reply);
                    last_tx = Clock::now();
                }
            }
        } else if (auto* telemetry = std::get_if<Telemetry>(&msg)) {
            if (handlers.on_telemetry) handlers.on_telemetry(*telemetry);
        }
        return true;
    };
    return session_loop(transport, cfg, dispatch, idle);
}

DetectorClient::DetectorClient(std::unique_ptr<Transport> transport, const SessionConfig& cfg)
    : transport_(std::move(transport)), cfg_(cfg) {}

DetectorClient::~DetectorClient() { close(); }

void DetectorClient::close() {
    if (transport_) transport_->close();
}

void DetectorClient::send_telemetry(const Telemetry& telemetry) {
    send_frame(*transport_, LinkMessage{telemetry});
}

std::vector<detect::Detection> DetectorClient::request_detections(const Image& img,
                                                                  uint32_t frame_id) {
    VideoFrame frame;
    frame.frame_id = frame_id;
    frame.width = static_cast<uint16_t>(img.width);
    frame.height = static_cast<uint16_t>(img.height);
    frame.pixels = img.pixels;
    send_frame(*transport_, LinkMessage{std::move(frame)});

    auto deadline = Clock::now() + std::chrono::milliseconds(cfg_.request_timeout_ms);
    uint8_t buf[4096];
    for (;;) {
        int remaining = static_cast<int>(
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now())
                .count());
        if (remaining <= 0)
            throw Error(ErrorCode::Timeout, "no detection report for frame " +
                                                std::to_string(frame_id));
        std::optional<size_t> got = transport_->receive(buf, sizeof(buf), remaining);
        if (!got.has_value())
            throw Error(ErrorCode::Timeout, "no detection report for frame " +
                                                std::to_string(frame_id));
        if (*got == 0) throw Error(ErrorCode::LinkClosed, "detector session closed");

        std::vector<DecodeEvent> events;
        decoder_.feed(buf, *got, events);
        for (DecodeEvent& ev : events) {
            if (std::holds_alternative<DecodeError>(ev)) continue;
            LinkMessage& msg = std::get<LinkMessage>(ev);
            if (auto* report = std::get_if<DetectionReport>(&msg)) {
                if (report->frame_id != frame_id)
                    throw Error(ErrorCode::FrameMismatch,
                                "expected report for frame " + std::to_string(frame_id) +
                                    ", got " + std::to_string(report->frame_id));
                return std::move(report->detections);
            }
            // heartbeats and supervisory commands may interleave; skip them
        }
    }
}

} // namespace netpen::link
