#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace kmm {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

// The file is written in full or kmm::Error(io_failure) is thrown.
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

} // namespace kmm
