#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "kmm/raster_image.hpp"

namespace kmm::pnm {

// Binary PGM (P5) and PPM (P6) with maxval 255 only. Header comments are
// skipped on read; written headers are canonical ("P5\n<w> <h>\n255\n").

RasterImage decode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode(const RasterImage& image);

RasterImage read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const RasterImage& image);

} // namespace kmm::pnm
