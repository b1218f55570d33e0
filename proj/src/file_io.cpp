#include "kmm/file_io.hpp"

#include <fstream>
#include <iterator>

#include "kmm/error.hpp"

namespace kmm {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::io_failure, "cannot open " + path.string() + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw Error(ErrorCode::io_failure, "read error on " + path.string());
    return bytes;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw Error(ErrorCode::io_failure, "write error on " + path.string());
}

} // namespace kmm
