#include "kmm/container.hpp"

#include <algorithm>
#include <string>

#include "kmm/error.hpp"

namespace kmm::container {
namespace {

class BitWriter {
public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

    // Appends the low `bits` bits of value, most significant first.
    void write(std::uint32_t value, int bits) {
        acc_ = (acc_ << bits) | (value & ((1u << bits) - 1u));
        filled_ += bits;
        while (filled_ >= 8) {
            filled_ -= 8;
            out_.push_back(static_cast<std::uint8_t>(acc_ >> filled_));
        }
        acc_ &= (1u << filled_) - 1u;
    }

    void flush() {
        if (filled_ > 0) {
            out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - filled_)));
            filled_ = 0;
            acc_ = 0;
        }
    }

private:
    std::vector<std::uint8_t>& out_;
    std::uint32_t acc_ = 0;
    int filled_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> in) : in_(in) {}

    // Caller guarantees enough input remains.
    std::uint32_t read(int bits) {
        while (filled_ < bits) {
            acc_ = (acc_ << 8) | in_[pos_++];
            filled_ += 8;
        }
        filled_ -= bits;
        const auto value = (acc_ >> filled_) & ((1u << bits) - 1u);
        acc_ &= (1u << filled_) - 1u;
        return value;
    }

    // Bits left over in the last consumed byte.
    std::uint32_t leftover() const noexcept { return acc_; }

private:
    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    std::uint32_t acc_ = 0;
    int filled_ = 0;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in) {
    return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) |
           (std::uint32_t{in[2]} << 8) | std::uint32_t{in[3]};
}

} // namespace

std::uint64_t payload_size(std::uint64_t samples, Modulus k) noexcept {
    const auto bits = static_cast<std::uint64_t>(bits_per_pixel(k));
    // samples * bits can exceed 64 bits only for absurd geometries; split the
    // division to stay exact.
    return (samples / 8) * bits + ((samples % 8) * bits + 7) / 8;
}

std::vector<std::uint8_t> pack(const QuotientImage& qimage) {
    const auto k = qimage.modulus();
    std::vector<std::uint8_t> out(magic.begin(), magic.end());
    out.reserve(header_size + payload_size(qimage.sample_count(), k));
    out.push_back(version);
    out.push_back(static_cast<std::uint8_t>(k.value()));
    out.push_back(static_cast<std::uint8_t>(qimage.channels()));
    put_u32(out, qimage.width());
    put_u32(out, qimage.height());

    const int bits = bits_per_pixel(k);
    BitWriter writer(out);
    for (const auto q : qimage.quotients()) writer.write(q, bits);
    writer.flush();
    return out;
}

QuotientImage unpack(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < magic.size() || !std::equal(magic.begin(), magic.end(), bytes.begin()))
        throw Error(ErrorCode::bad_magic, "not a KMM1 container");
    if (bytes.size() < header_size)
        throw Error(ErrorCode::truncated_payload, "container header is truncated");
    if (bytes[4] != version)
        throw Error(ErrorCode::unsupported_version,
                    "unsupported container version " + std::to_string(bytes[4]));
    const auto k = Modulus::try_make(bytes[5]);
    if (!k)
        throw Error(ErrorCode::invalid_modulus,
                    "container declares k=" + std::to_string(bytes[5]) + ", outside " +
                        std::to_string(Modulus::min_value) + ".." +
                        std::to_string(Modulus::max_value));
    const std::uint32_t channels = bytes[6];
    if (channels != 1 && channels != 3)
        throw Error(ErrorCode::bad_channels,
                    "container declares " + std::to_string(channels) + " channels");
    const auto width = get_u32(bytes.subspan(7, 4));
    const auto height = get_u32(bytes.subspan(11, 4));

    const auto samples = checked_sample_count(width, height, channels);
    const auto payload = bytes.subspan(header_size);
    const auto expected = payload_size(samples, *k);
    if (payload.size() < expected)
        throw Error(ErrorCode::truncated_payload,
                    "payload holds " + std::to_string(payload.size()) + " bytes, expected " +
                        std::to_string(expected));
    if (payload.size() > expected)
        throw Error(ErrorCode::trailing_data,
                    std::to_string(payload.size() - expected) + " bytes after payload");

    const int bits = bits_per_pixel(*k);
    const auto q_max = static_cast<std::uint32_t>(max_quotient(*k));
    std::vector<std::uint8_t> quotients(samples);
    BitReader reader(payload);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto q = reader.read(bits);
        if (q > q_max)
            throw Error(ErrorCode::corrupt_stream,
                        "quotient " + std::to_string(q) + " at sample " + std::to_string(i) +
                            " exceeds maximum " + std::to_string(q_max));
        quotients[i] = static_cast<std::uint8_t>(q);
    }
    if (reader.leftover() != 0)
        throw Error(ErrorCode::corrupt_stream, "nonzero padding bits after last quotient");

    return QuotientImage(*k, width, height, channels, std::move(quotients));
}

} // namespace kmm::container
