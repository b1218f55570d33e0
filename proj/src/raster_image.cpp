#include "kmm/raster_image.hpp"

#include <limits>
#include <string>

#include "kmm/error.hpp"

namespace kmm {

std::size_t checked_sample_count(std::uint64_t width, std::uint64_t height,
                                 std::uint64_t channels) {
    if (width == 0 || height == 0)
        throw Error(ErrorCode::invalid_image, "image dimensions must be at least 1x1");
    if (channels != 1 && channels != 3)
        throw Error(ErrorCode::invalid_image,
                    "unsupported channel count " + std::to_string(channels));
    constexpr auto limit = std::numeric_limits<std::size_t>::max() / 3;
    if (width > limit / height)
        throw Error(ErrorCode::invalid_image, "image dimensions overflow");
    return static_cast<std::size_t>(width * height * channels);
}

RasterImage::RasterImage(std::uint32_t width, std::uint32_t height, std::uint32_t channels,
                         std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), channels_(channels), pixels_(std::move(pixels)) {
    const auto expected = checked_sample_count(width, height, channels);
    if (pixels_.size() != expected)
        throw Error(ErrorCode::invalid_image,
                    "pixel buffer holds " + std::to_string(pixels_.size()) +
                        " samples, geometry requires " + std::to_string(expected));
}

RasterImage RasterImage::filled(std::uint32_t width, std::uint32_t height,
                                std::uint32_t channels, std::uint8_t value) {
    std::vector<std::uint8_t> pixels(checked_sample_count(width, height, channels), value);
    return RasterImage(width, height, channels, std::move(pixels));
}

} // namespace kmm
