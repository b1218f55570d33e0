#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kmm {

/// Decoded 8-bit raster, row-major with interleaved channels (1 = gray, 3 = RGB).
///
/// The constructor validates geometry, so every live instance satisfies
/// pixels().size() == width * height * channels.
class RasterImage {
public:
    RasterImage(std::uint32_t width, std::uint32_t height, std::uint32_t channels,
                std::vector<std::uint8_t> pixels);

    /// Zero-filled image of the given geometry.
    static RasterImage filled(std::uint32_t width, std::uint32_t height,
                              std::uint32_t channels, std::uint8_t value = 0);

    std::uint32_t width() const noexcept { return width_; }
    std::uint32_t height() const noexcept { return height_; }
    std::uint32_t channels() const noexcept { return channels_; }
    std::size_t sample_count() const noexcept { return pixels_.size(); }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    bool same_shape(const RasterImage& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_ &&
               channels_ == other.channels_;
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;

private:
    std::uint32_t width_;
    std::uint32_t height_;
    std::uint32_t channels_;
    std::vector<std::uint8_t> pixels_;
};

// Throws kmm::Error(invalid_image) when the geometry is not representable.
std::size_t checked_sample_count(std::uint64_t width, std::uint64_t height,
                                 std::uint64_t channels);

} // namespace kmm
