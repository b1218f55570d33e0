#include "kmm/error.hpp"

namespace kmm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::io_failure: return "io-failure";
    case ErrorCode::invalid_image: return "invalid-image";
    case ErrorCode::invalid_modulus: return "invalid-modulus";
    case ErrorCode::unknown_magic: return "unknown-magic";
    case ErrorCode::malformed_header: return "malformed-header";
    case ErrorCode::unsupported_maxval: return "unsupported-maxval";
    case ErrorCode::truncated_payload: return "truncated-payload";
    case ErrorCode::bad_magic: return "bad-magic";
    case ErrorCode::unsupported_version: return "unsupported-version";
    case ErrorCode::bad_channels: return "bad-channels";
    case ErrorCode::corrupt_stream: return "corrupt-stream";
    case ErrorCode::trailing_data: return "trailing-data";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::empty_histogram: return "empty-histogram";
    }
    return "unknown";
}

} // namespace kmm
