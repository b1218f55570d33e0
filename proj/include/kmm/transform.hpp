#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmm/modulus.hpp"
#include "kmm/raster_image.hpp"

namespace kmm {

// Pixel-level k-modulus quantization.
//
// A sample p maps to the quotient q = round_half_up(p / k) and back to
// min(255, q * k). Ties round up, so for k = 2 the quotients span 0..128.

/// round_half_up(p / k) == floor((2p + k) / 2k).
constexpr int to_quotient(int p, Modulus k) noexcept {
    const int kv = k.value();
    return (2 * p + kv) / (2 * kv);
}

/// Reconstructed sample, saturated to 255.
constexpr int from_quotient(int q, Modulus k) noexcept {
    const int v = q * k.value();
    return v > 255 ? 255 : v;
}

/// Nearest multiple of k (ties up), saturated to 255.
constexpr int quantize_pixel(int p, Modulus k) noexcept {
    return from_quotient(to_quotient(p, k), k);
}

/// Largest quotient reachable from an 8-bit sample: round_half_up(255 / k).
constexpr int max_quotient(Modulus k) noexcept { return to_quotient(255, k); }

/// Level count floor(256 / k) + 1 as tabulated for the method. This can be one
/// less than max_quotient(k) + 1 (e.g. k = 6); storage sizing never uses it.
constexpr int levels(Modulus k) noexcept { return 256 / k.value() + 1; }

/// Bits needed to store any quotient: the bit length of max_quotient(k).
constexpr int bits_per_pixel(Modulus k) noexcept {
    int bits = 0;
    for (int q = max_quotient(k); q > 0; q >>= 1) ++bits;
    return bits;
}

/// Quotient ("divided") representation of an image. Quotients are validated
/// against max_quotient(k) on construction.
class QuotientImage {
public:
    QuotientImage(Modulus k, std::uint32_t width, std::uint32_t height,
                  std::uint32_t channels, std::vector<std::uint8_t> quotients);

    Modulus modulus() const noexcept { return k_; }
    std::uint32_t width() const noexcept { return width_; }
    std::uint32_t height() const noexcept { return height_; }
    std::uint32_t channels() const noexcept { return channels_; }
    std::size_t sample_count() const noexcept { return quotients_.size(); }
    std::span<const std::uint8_t> quotients() const noexcept { return quotients_; }

    friend bool operator==(const QuotientImage&, const QuotientImage&) = default;

private:
    Modulus k_;
    std::uint32_t width_;
    std::uint32_t height_;
    std::uint32_t channels_;
    std::vector<std::uint8_t> quotients_;
};

/// g(x, y) = quantize_pixel(f(x, y)) for every sample; geometry unchanged.
RasterImage transform_image(const RasterImage& image, Modulus k);

QuotientImage quotient_image(const RasterImage& image, Modulus k);

/// reconstruct(quotient_image(img, k)) == transform_image(img, k).
RasterImage reconstruct(const QuotientImage& qimage);

} // namespace kmm
