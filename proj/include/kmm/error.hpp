#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmm {

enum class ErrorCode {
    io_failure,
    invalid_image,
    invalid_modulus,
    // PNM decoding
    unknown_magic,
    malformed_header,
    unsupported_maxval,
    truncated_payload,
    // KMM1 container decoding
    bad_magic,
    unsupported_version,
    bad_channels,
    corrupt_stream,
    trailing_data,
    // metrics
    shape_mismatch,
    empty_histogram,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can tell decode failures apart without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace kmm
