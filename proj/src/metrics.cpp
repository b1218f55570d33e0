#include "kmm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "kmm/error.hpp"

namespace kmm {
namespace {

void require_same_shape(const RasterImage& a, const RasterImage& b) {
    if (!a.same_shape(b))
        throw Error(ErrorCode::shape_mismatch,
                    "images differ in shape: " + std::to_string(a.width()) + "x" +
                        std::to_string(a.height()) + "x" + std::to_string(a.channels()) +
                        " vs " + std::to_string(b.width()) + "x" + std::to_string(b.height()) +
                        "x" + std::to_string(b.channels()));
}

double entropy_of(const Histogram::Bins& bins, std::uint64_t total) {
    double h = 0.0;
    for (const auto count : bins) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    // -0.0 for a single occupied bin
    return h == 0.0 ? 0.0 : h;
}

Histogram tally(std::span<const std::uint8_t> samples, std::uint32_t channels) {
    Histogram h;
    h.counts.assign(channels, Histogram::Bins{});
    h.total = samples.size() / channels;
    for (std::size_t i = 0; i < samples.size(); ++i) ++h.counts[i % channels][samples[i]];
    return h;
}

} // namespace

double mse(const RasterImage& a, const RasterImage& b) {
    require_same_shape(a, b);
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    // Exact integer accumulation; 255^2 * samples fits easily in 64 bits.
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const int d = int{pa[i]} - int{pb[i]};
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr_from_mse(double mse) noexcept {
    if (mse <= 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double psnr(const RasterImage& a, const RasterImage& b) { return psnr_from_mse(mse(a, b)); }

QualityReport compare(const RasterImage& a, const RasterImage& b) {
    require_same_shape(a, b);
    const auto channels = a.channels();
    std::vector<std::uint64_t> sums(channels, 0);
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const int d = int{pa[i]} - int{pb[i]};
        sums[i % channels] += static_cast<std::uint64_t>(d * d);
    }

    QualityReport report;
    std::uint64_t pooled = 0;
    const double per_channel_samples = static_cast<double>(pa.size() / channels);
    for (const auto s : sums) {
        pooled += s;
        report.per_channel_psnr.push_back(psnr_from_mse(static_cast<double>(s) / per_channel_samples));
    }
    report.mse = static_cast<double>(pooled) / static_cast<double>(pa.size());
    report.psnr_db = psnr_from_mse(report.mse);
    return report;
}

std::string format_decibels(double db, int decimals) {
    if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, db);
    return buf;
}

Histogram histogram(const RasterImage& image) { return tally(image.pixels(), image.channels()); }

Histogram histogram(const QuotientImage& qimage) {
    return tally(qimage.quotients(), qimage.channels());
}

std::vector<double> entropy(const Histogram& h) {
    if (h.total == 0 || h.counts.empty())
        throw Error(ErrorCode::empty_histogram, "entropy of an empty histogram");
    std::vector<double> out;
    out.reserve(h.counts.size());
    for (const auto& bins : h.counts) out.push_back(entropy_of(bins, h.total));
    return out;
}

double pooled_entropy(const Histogram& h) {
    if (h.total == 0 || h.counts.empty())
        throw Error(ErrorCode::empty_histogram, "entropy of an empty histogram");
    Histogram::Bins merged{};
    for (const auto& bins : h.counts)
        for (std::size_t v = 0; v < bins.size(); ++v) merged[v] += bins[v];
    return entropy_of(merged, h.total * h.counts.size());
}

double model_mse(Modulus k) noexcept {
    const int kv = k.value();
    long sum = 0;
    for (int r = 0; r < kv; ++r) {
        const int d = std::min(r, kv - r);
        sum += d * d;
    }
    return static_cast<double>(sum) / kv;
}

double model_psnr(Modulus k) noexcept { return psnr_from_mse(model_mse(k)); }

} // namespace kmm
