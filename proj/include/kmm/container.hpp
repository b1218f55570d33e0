#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kmm/transform.hpp"

namespace kmm::container {

// KMM1 layout (all integers big-endian):
//
//   offset  size  field
//   0       4     magic "KMM1"
//   4       1     version (1)
//   5       1     k
//   6       1     channels (1 or 3)
//   7       4     width
//   11      4     height
//   15      ...   payload
//
// The payload holds every quotient in row-major, channel-interleaved order,
// each in exactly bits_per_pixel(k) bits, MSB-first. The final partial byte is
// zero-padded in its low bits.

inline constexpr std::array<std::uint8_t, 4> magic{'K', 'M', 'M', '1'};
inline constexpr std::uint8_t version = 1;
inline constexpr std::size_t header_size = 15;

/// ceil(samples * bits_per_pixel(k) / 8).
std::uint64_t payload_size(std::uint64_t samples, Modulus k) noexcept;

std::vector<std::uint8_t> pack(const QuotientImage& qimage);

/// Exact inverse of pack(). Throws kmm::Error with bad_magic,
/// unsupported_version, invalid_modulus, bad_channels, invalid_image,
/// truncated_payload, trailing_data or corrupt_stream.
QuotientImage unpack(std::span<const std::uint8_t> bytes);

} // namespace kmm::container
