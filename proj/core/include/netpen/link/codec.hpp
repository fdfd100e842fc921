#pragma once

#include "netpen/link/messages.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace netpen::link {

// Wire format, all integers little-endian, floats 32-bit IEEE-754:
//   magic "NP" | version 0x01 | type u8 | payload length u32 | payload |
//   CRC-32 of the payload (u32)
// The decoder validates magic, version, type, the length bound (2^24), the
// CRC, and the per-type payload schema; after a corrupt frame it
// resynchronizes by scanning for the next magic.

inline constexpr uint8_t kMagic0 = 0x4E;
inline constexpr uint8_t kMagic1 = 0x50;
inline constexpr uint8_t kVersion = 0x01;
inline constexpr uint32_t kMaxPayload = 1u << 24;
inline constexpr size_t kHeaderSize = 8;

/// Throws Error(OversizePayload) when the payload exceeds 2^24 bytes.
std::vector<uint8_t> encode_message(const LinkMessage& msg);

struct DecodeError {
    enum class Code {
        BadMagic,
        BadVersion,
        UnknownType,
        BadLength,
        BadCrc,
        BadPayload,
        Truncated,
    };
    Code code;

    bool operator==(const DecodeError&) const = default;
};

const char* to_string(DecodeError::Code code);

using DecodeEvent = std::variant<LinkMessage, DecodeError>;

/// Incremental decoder; the message sequence is independent of how the byte
/// stream is chunked. One garbage run emits one BadMagic event.
class StreamDecoder {
public:
    void feed(const uint8_t* data, size_t len, std::vector<DecodeEvent>& out);
    std::vector<DecodeEvent> feed(const std::vector<uint8_t>& data);

    /// Signals end-of-stream; reports Truncated if a partial frame remains.
    std::vector<DecodeEvent> finish();

    size_t buffered() const { return buf_.size(); }

private:
    void process(std::vector<DecodeEvent>& out);
    void note_garbage(std::vector<DecodeEvent>& out, DecodeError::Code code);

    std::vector<uint8_t> buf_;
    bool in_garbage_ = false;
};

} // namespace netpen::link
