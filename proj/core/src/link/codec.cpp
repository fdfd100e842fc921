#include "netpen/link/codec.hpp"

#include "netpen/error.hpp"
#include "netpen/link/crc32.hpp"

#include <cmath>
#include <cstring>
#include <optional>

namespace netpen::link {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

void put_f32(std::vector<uint8_t>& out, float v) {
    static_assert(sizeof(float) == 4);
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

struct Reader {
    const uint8_t* p;
    size_t len;
    size_t pos = 0;

    bool ok(size_t n) const { return pos + n <= len; }
    uint8_t u8() { return p[pos++]; }
    uint16_t u16() {
        uint16_t v = static_cast<uint16_t>(p[pos] | (p[pos + 1] << 8));
        pos += 2;
        return v;
    }
    uint32_t u32() {
        uint32_t v = static_cast<uint32_t>(p[pos]) | (static_cast<uint32_t>(p[pos + 1]) << 8) |
                     (static_cast<uint32_t>(p[pos + 2]) << 16) |
                     (static_cast<uint32_t>(p[pos + 3]) << 24);
        pos += 4;
        return v;
    }
    float f32() {
        uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }
};

std::vector<uint8_t> encode_payload(const LinkMessage& msg) {
    std::vector<uint8_t> p;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, VideoFrame>) {
                put_u32(p, m.frame_id);
                put_u16(p, m.width);
                put_u16(p, m.height);
                p.insert(p.end(), m.pixels.begin(), m.pixels.end());
            } else if constexpr (std::is_same_v<T, VelocityCommand>) {
                put_f32(p, m.surge);
                put_f32(p, m.sway);
                put_f32(p, m.heave);
                put_f32(p, m.yaw_rate);
            } else if constexpr (std::is_same_v<T, Telemetry>) {
                put_f32(p, m.depth);
                put_f32(p, m.heading);
                p.push_back(m.est_distance ? 1 : 0);
                put_f32(p, m.est_distance.value_or(0.f));
                p.push_back(m.phase);
                put_u32(p, m.frame_id);
            } else if constexpr (std::is_same_v<T, DetectionReport>) {
                put_u32(p, m.frame_id);
                put_u16(p, static_cast<uint16_t>(m.detections.size()));
                for (const detect::Detection& d : m.detections) {
                    p.push_back(static_cast<uint8_t>(d.cls));
                    put_f32(p, static_cast<float>(d.bbox.x_min));
                    put_f32(p, static_cast<float>(d.bbox.y_min));
                    put_f32(p, static_cast<float>(d.bbox.x_max));
                    put_f32(p, static_cast<float>(d.bbox.y_max));
                    put_f32(p, static_cast<float>(d.confidence));
                }
            } else {
                static_assert(std::is_same_v<T, Heartbeat>);
            }
        },
        msg);
    return p;
}

bool valid_unit(float v) { return std::isfinite(v) && v >= -1.f && v <= 1.f; }

// Strict per-type schema checks; the type byte sits outside the CRC, so a
// flipped type must not let a payload reinterpret as another message.
std::optional<LinkMessage> parse_payload(MsgType type, const uint8_t* data, size_t len) {
    Reader r{data, len};
    switch (type) {
        case MsgType::VideoFrame: {
            if (len < 8) return std::nullopt;
            VideoFrame m;
            m.frame_id = r.u32();
            m.width = r.u16();
            m.height = r.u16();
            if (m.width == 0 || m.height == 0) return std::nullopt;
            size_t expected = static_cast<size_t>(m.width) * m.height;
            if (len != 8 + expected) return std::nullopt;
            m.pixels.assign(data + 8, data + len);
            return LinkMessage{std::move(m)};
        }
        case MsgType::VelocityCommand: {
            if (len != 16) return std::nullopt;
            VelocityCommand m;
            m.surge = r.f32();
            m.sway = r.f32();
            m.heave = r.f32();
            m.yaw_rate = r.f32();
            if (!valid_unit(m.surge) || !valid_unit(m.sway) || !valid_unit(m.heave) ||
                !valid_unit(m.yaw_rate))
                return std::nullopt;
            return LinkMessage{m};
        }
        case MsgType::Telemetry: {
            if (len != 18) return std::nullopt;
            Telemetry m;
            m.depth = r.f32();
            m.heading = r.f32();
            uint8_t has = r.u8();
            float est = r.f32();
            m.phase = r.u8();
            m.frame_id = r.u32();
            if (!std::isfinite(m.depth) || m.depth < 0.f) return std::nullopt;
            if (!std::isfinite(m.heading) || std::abs(m.heading) > kTwoPi) return std::nullopt;
            if (has > 1) return std::nullopt;
            if (has) {
                if (!std::isfinite(est) || est < 0.f) return std::nullopt;
                m.est_distance = est;
            } else if (est != 0.f) {
                return std::nullopt;
            }
            if (m.phase > 4) return std::nullopt;
            return LinkMessage{m};
        }
        case MsgType::DetectionReport: {
            if (len < 6) return std::nullopt;
            DetectionReport m;
            m.frame_id = r.u32();
            uint16_t count = r.u16();
            if (len != 6 + static_cast<size_t>(count) * 21) return std::nullopt;
            m.detections.reserve(count);
            for (uint16_t i = 0; i < count; ++i) {
                uint8_t cls = r.u8();
                if (cls >= kNumDefectClasses) return std::nullopt;
                detect::Detection d;
                d.cls = static_cast<DefectClass>(cls);
                d.bbox.x_min = r.f32();
                d.bbox.y_min = r.f32();
                d.bbox.x_max = r.f32();
                d.bbox.y_max = r.f32();
                float conf = r.f32();
                if (!std::isfinite(d.bbox.x_min) || !std::isfinite(d.bbox.y_min) ||
                    !std::isfinite(d.bbox.x_max) || !std::isfinite(d.bbox.y_max))
                    return std::nullopt;
                if (!d.bbox.valid()) return std::nullopt;
                if (!std::isfinite(conf) || conf < 0.f || conf > 1.f) return std::nullopt;
                d.confidence = conf;
                m.detections.push_back(d);
            }
            return LinkMessage{std::move(m)};
        }
        case MsgType::Heartbeat: {
            if (len != 0) return std::nullopt;
            return LinkMessage{Heartbeat{}};
        }
    }
    return std::nullopt;
}

} // namespace

MsgType message_type(const LinkMessage& msg) {
    return std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, VideoFrame>) return MsgType::VideoFrame;
            else if constexpr (std::is_same_v<T, VelocityCommand>) return MsgType::VelocityCommand;
            else if constexpr (std::is_same_v<T, Telemetry>) return MsgType::Telemetry;
            else if constexpr (std::is_same_v<T, DetectionReport>) return MsgType::DetectionReport;
            else return MsgType::Heartbeat;
        },
        msg);
}

const char* to_string(DecodeError::Code code) {
    switch (code) {
        case DecodeError::Code::BadMagic: return "bad-magic";
        case DecodeError::Code::BadVersion: return "bad-version";
        case DecodeError::Code::UnknownType: return "unknown-type";
        case DecodeError::Code::BadLength: return "bad-length";
        case DecodeError::Code::BadCrc: return "bad-crc";
        case DecodeError::Code::BadPayload: return "bad-payload";
        case DecodeError::Code::Truncated: return "truncated";
    }
    return "unknown";
}

std::vector<uint8_t> encode_message(const LinkMessage& msg) {
    std::vector<uint8_t> payload = encode_payload(msg);
    if (payload.size() > kMaxPayload)
        throw Error(ErrorCode::OversizePayload,
                    "payload of " + std::to_string(payload.size()) + " bytes exceeds 2^24");

    std::vector<uint8_t> frame;
    frame.reserve(kHeaderSize + payload.size() + 4);
    frame.push_back(kMagic0);
    frame.push_back(kMagic1);
    frame.push_back(kVersion);
    frame.push_back(static_cast<uint8_t>(message_type(msg)));
    put_u32(frame, static_cast<uint32_t>(payload.size()));
    frame.insert(frame.end(), payload.begin(), payload.end());
    put_u32(frame, crc32(payload.data(), payload.size()));
    return frame;
}

void StreamDecoder::note_garbage(std::vector<DecodeEvent>& out, DecodeError::Code code) {
    if (!in_garbage_) {
        out.push_back(DecodeError{code});
        in_garbage_ = true;
    }
    buf_.erase(buf_.begin()); // resync: scan forward for the next magic
}

void StreamDecoder::process(std::vector<DecodeEvent>& out) {
    for (;;) {
        if (buf_.size() < 2) return;
        if (buf_[0] != kMagic0 || buf_[1] != kMagic1) {
            note_garbage(out, DecodeError::Code::BadMagic);
            continue;
        }
        if (buf_.size() < kHeaderSize) return;
        uint8_t version = buf_[2];
        uint8_t type = buf_[3];
        uint32_t length = static_cast<uint32_t>(buf_[4]) | (static_cast<uint32_t>(buf_[5]) << 8) |
                          (static_cast<uint32_t>(buf_[6]) << 16) |
                          (static_cast<uint32_t>(buf_[7]) << 24);
        if (version != kVersion) {
            note_garbage(out, DecodeError::Code::BadVersion);
            continue;
        }
        if (type < 0x01 || type > 0x05) {
            note_garbage(out, DecodeError::Code::UnknownType);
            continue;
        }
        if (length > kMaxPayload) {
            note_garbage(out, DecodeError::Code::BadLength);
            continue;
        }
        size_t total = kHeaderSize + static_cast<size_t>(length) + 4;
        if (buf_.size() < total) return;

        const uint8_t* payload = buf_.data() + kHeaderSize;
        uint32_t stored = static_cast<uint32_t>(buf_[total - 4]) |
                          (static_cast<uint32_t>(buf_[total - 3]) << 8) |
                          (static_cast<uint32_t>(buf_[total - 2]) << 16) |
                          (static_cast<uint32_t>(buf_[total - 1]) << 24);
        if (crc32(payload, length) != stored) {
            note_garbage(out, DecodeError::Code::BadCrc);
            continue;
        }
        std::optional<LinkMessage> msg = parse_payload(static_cast<MsgType>(type), payload, length);
        if (!msg) {
            note_garbage(out, DecodeError::Code::BadPayload);
            continue;
        }
        out.push_back(std::move(*msg));
        buf_.erase(buf_.begin(), buf_.begin() + static_cast<ptrdiff_t>(total));
        in_garbage_ = false;
    }
}

void StreamDecoder::feed(const uint8_t* data, size_t len, std::vector<DecodeEvent>& out) {
    buf_.insert(buf_.end(), data, data + len);
    process(out);
}

std::vector<DecodeEvent> StreamDecoder::feed(const std::vector<uint8_t>& data) {
    std::vector<DecodeEvent> out;
    feed(data.data(), data.size(), out);
    return out;
}

std::vector<DecodeEvent> StreamDecoder::finish() {
    std::vector<DecodeEvent> out;
    if (!buf_.empty()) {
        out.push_back(DecodeError{DecodeError::Code::Truncated});
        buf_.clear();
    }
    in_garbage_ = false;
    return out;
}

} // namespace netpen::link
