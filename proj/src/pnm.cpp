#include "kmm/pnm.hpp"

#include <string>

#include "kmm/error.hpp"
#include "kmm/file_io.hpp"

namespace kmm::pnm {
namespace {

bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments that run to end of line.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint64_t read_number(const char* field) {
        const auto start = pos_;
        skip_separators();
        if (pos_ == start)
            throw Error(ErrorCode::malformed_header,
                        std::string("expected whitespace before ") + field);
        if (pos_ >= bytes_.size())
            throw Error(ErrorCode::malformed_header,
                        std::string("header ends before ") + field);
        if (!is_digit(bytes_[pos_]))
            throw Error(ErrorCode::malformed_header, std::string("non-numeric ") + field);
        std::uint64_t value = 0;
        while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 0xFFFF'FFFFu)
                throw Error(ErrorCode::malformed_header, std::string(field) + " out of range");
            ++pos_;
        }
        return value;
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }
    bool at_end() const noexcept { return pos_ >= bytes_.size(); }
    std::uint8_t peek() const noexcept { return bytes_[pos_]; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

RasterImage decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw Error(ErrorCode::unknown_magic, "not a binary PGM (P5) or PPM (P6) file");
    const std::uint32_t channels = bytes[1] == '5' ? 1 : 3;

    HeaderReader reader(bytes);
    reader.advance(2);
    const auto width = reader.read_number("width");
    const auto height = reader.read_number("height");
    const auto maxval = reader.read_number("maxval");
    if (width == 0 || height == 0)
        throw Error(ErrorCode::malformed_header, "zero image dimension");
    if (maxval != 255)
        throw Error(ErrorCode::unsupported_maxval,
                    "maxval " + std::to_string(maxval) + " is not supported (only 255)");

    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.at_end())
        throw Error(ErrorCode::truncated_payload, "file ends after header");
    if (!is_space(reader.peek()))
        throw Error(ErrorCode::malformed_header, "missing whitespace after maxval");
    reader.advance(1);

    const auto samples = checked_sample_count(width, height, channels);
    const auto available = bytes.size() - reader.pos();
    if (available < samples)
        throw Error(ErrorCode::truncated_payload,
                    "payload holds " + std::to_string(available) + " bytes, expected " +
                        std::to_string(samples));

    const auto payload = bytes.subspan(reader.pos(), samples);
    return RasterImage(static_cast<std::uint32_t>(width), static_cast<std::uint32_t>(height),
                       channels, std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

std::vector<std::uint8_t> encode(const RasterImage& image) {
    const std::string header = std::string(image.channels() == 1 ? "P5" : "P6") + "\n" +
                               std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + image.sample_count());
    out.insert(out.end(), header.begin(), header.end());
    const auto pixels = image.pixels();
    out.insert(out.end(), pixels.begin(), pixels.end());
    return out;
}

RasterImage read_file(const std::filesystem::path& path) { return decode(read_bytes(path)); }

void write_file(const std::filesystem::path& path, const RasterImage& image) {
    write_bytes(path, encode(image));
}

} // namespace kmm::pnm
