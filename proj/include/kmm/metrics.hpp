#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kmm/modulus.hpp"
#include "kmm/raster_image.hpp"
#include "kmm/transform.hpp"

namespace kmm {

struct QualityReport {
    double mse = 0.0;
    // +infinity when mse == 0.
    double psnr_db = 0.0;
    std::vector<double> per_channel_psnr;
};

/// Mean of squared sample differences, pooled over all channels.
/// Throws kmm::Error(shape_mismatch).
double mse(const RasterImage& a, const RasterImage& b);

/// 10 log10(255^2 / mse); +infinity for identical images.
double psnr(const RasterImage& a, const RasterImage& b);

double psnr_from_mse(double mse) noexcept;

QualityReport compare(const RasterImage& a, const RasterImage& b);

/// "inf" for infinite values, otherwise fixed with `decimals` places.
std::string format_decibels(double db, int decimals = 4);

struct Histogram {
    using Bins = std::array<std::uint64_t, 256>;

    std::vector<Bins> counts; // one entry per channel
    std::uint64_t total = 0;  // samples per channel

    std::uint32_t channels() const noexcept {
        return static_cast<std::uint32_t>(counts.size());
    }
};

Histogram histogram(const RasterImage& image);

// Quotients are at most 128, so the same 256-bin layout is used.
Histogram histogram(const QuotientImage& qimage);

/// Shannon entropy in bits/sample for each channel. Zero bins contribute 0.
/// Throws kmm::Error(empty_histogram) when total == 0.
std::vector<double> entropy(const Histogram& h);

/// Entropy of the distribution obtained by merging all channels.
double pooled_entropy(const Histogram& h);

/// Mean squared error predicted when residues p mod k are uniformly
/// distributed: (1/k) * sum_{r<k} min(r, k - r)^2.
double model_mse(Modulus k) noexcept;

double model_psnr(Modulus k) noexcept;

} // namespace kmm
