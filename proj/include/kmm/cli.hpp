#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kmm/modulus.hpp"
#include "kmm/raster_image.hpp"

namespace kmm::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct SweepRow {
    int k = 0;
    double psnr_db = 0.0;
    double mse = 0.0;
    int bits_per_pixel = 0;
    int levels = 0;
    double quotient_entropy = 0.0;
    std::uint64_t packed_bytes = 0;
};

/// One row per k in [k_min, k_max], ascending. PSNR is always measured
/// against `original`.
std::vector<SweepRow> sweep(const RasterImage& original, Modulus k_min, Modulus k_max);

std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string histogram_csv(const RasterImage& image);

/// Entry point shared by the kmm executable and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kmm::cli
