#include "kmm/transform.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "kmm/error.hpp"

namespace kmm {
namespace {

// Both maps depend only on the sample value, so whole images go through a
// 256-entry lookup table.
template <typename Fn>
std::array<std::uint8_t, 256> make_table(Fn&& fn) {
    std::array<std::uint8_t, 256> table{};
    for (int v = 0; v < 256; ++v) table[v] = static_cast<std::uint8_t>(fn(v));
    return table;
}

} // namespace

QuotientImage::QuotientImage(Modulus k, std::uint32_t width, std::uint32_t height,
                             std::uint32_t channels, std::vector<std::uint8_t> quotients)
    : k_(k), width_(width), height_(height), channels_(channels),
      quotients_(std::move(quotients)) {
    const auto expected = checked_sample_count(width, height, channels);
    if (quotients_.size() != expected)
        throw Error(ErrorCode::invalid_image,
                    "quotient buffer holds " + std::to_string(quotients_.size()) +
                        " samples, geometry requires " + std::to_string(expected));
    const int q_max = max_quotient(k);
    const auto bad = std::find_if(quotients_.begin(), quotients_.end(),
                                  [q_max](std::uint8_t q) { return q > q_max; });
    if (bad != quotients_.end())
        throw Error(ErrorCode::invalid_image,
                    "quotient " + std::to_string(*bad) + " exceeds maximum " +
                        std::to_string(q_max) + " for k=" + std::to_string(k.value()));
}

RasterImage transform_image(const RasterImage& image, Modulus k) {
    const auto table = make_table([k](int p) { return quantize_pixel(p, k); });
    std::vector<std::uint8_t> out(image.sample_count());
    std::ranges::transform(image.pixels(), out.begin(),
                           [&table](std::uint8_t p) { return table[p]; });
    return RasterImage(image.width(), image.height(), image.channels(), std::move(out));
}

QuotientImage quotient_image(const RasterImage& image, Modulus k) {
    const auto table = make_table([k](int p) { return to_quotient(p, k); });
    std::vector<std::uint8_t> out(image.sample_count());
    std::ranges::transform(image.pixels(), out.begin(),
                           [&table](std::uint8_t p) { return table[p]; });
    return QuotientImage(k, image.width(), image.height(), image.channels(), std::move(out));
}

RasterImage reconstruct(const QuotientImage& qimage) {
    const auto k = qimage.modulus();
    const auto table = make_table([k](int q) { return from_quotient(q, k); });
    std::vector<std::uint8_t> out(qimage.sample_count());
    std::ranges::transform(qimage.quotients(), out.begin(),
                           [&table](std::uint8_t q) { return table[q]; });
    return RasterImage(qimage.width(), qimage.height(), qimage.channels(), std::move(out));
}

} // namespace kmm
