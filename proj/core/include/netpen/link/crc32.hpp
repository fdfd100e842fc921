#pragma once

#include <cstddef>
#include <cstdint>

namespace netpen::link {

/// CRC-32 (IEEE 802.3 polynomial, reflected, init and final xor 0xFFFFFFFF).
/// crc32("123456789") == 0xCBF43926.
uint32_t crc32(const uint8_t* data, size_t len);

uint32_t crc32_update(uint32_t crc, const uint8_t* data, size_t len);

} // namespace netpen::link
