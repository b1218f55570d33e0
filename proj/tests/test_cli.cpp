#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kmm/cli.hpp"
#include "kmm/container.hpp"
#include "kmm/file_io.hpp"
#include "kmm/metrics.hpp"
#include "kmm/pnm.hpp"
#include "kmm/transform.hpp"
#include "oracles.hpp"

using namespace kmm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("kmm_cli_test_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::string read_text(const std::string& path) {
    const auto bytes = read_bytes(path);
    return std::string(bytes.begin(), bytes.end());
}

RasterImage gradient(std::uint32_t w, std::uint32_t h, std::uint32_t c) {
    std::vector<std::uint8_t> px(std::size_t{w} * h * c);
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<std::uint8_t>((i * 37) % 256);
    return RasterImage(w, h, c, std::move(px));
}

} // namespace

TEST_CASE("transform writes quantized output and prints psnr") {
    TempDir dir;
    const auto img = gradient(31, 17, 1);
    pnm::write_file(dir.file("in.pgm"), img);

    const auto r = run({"transform", "-k", "5", dir.file("in.pgm"), dir.file("out.pgm")});
    REQUIRE(r.status == 0);
    const auto out = pnm::read_file(dir.file("out.pgm"));
    CHECK(out == transform_image(img, Modulus(5)));
    for (const auto p : out.pixels()) CHECK((p % 5 == 0 || p == 255));
    CHECK(r.out.find("psnr_db: " + format_decibels(psnr(img, out))) != std::string::npos);

    const auto long_flag = run({"transform", "--k", "5", dir.file("in.pgm"), dir.file("o2.pgm")});
    CHECK(long_flag.status == 0);
    CHECK(read_bytes(dir.file("o2.pgm")) == read_bytes(dir.file("out.pgm")));
}

TEST_CASE("transform usage and decode errors") {
    TempDir dir;
    pnm::write_file(dir.file("in.pgm"), gradient(4, 4, 1));
    CHECK(run({"transform", "-k", "1", dir.file("in.pgm"), dir.file("o.pgm")}).status ==
          cli::exit_usage);
    CHECK(run({"transform", "-k", "129", dir.file("in.pgm"), dir.file("o.pgm")}).status ==
          cli::exit_usage);
    CHECK(run({"transform", dir.file("in.pgm"), dir.file("o.pgm")}).status == cli::exit_usage);
    CHECK(run({}).status == cli::exit_usage);
    CHECK(run({"bogus"}).status == cli::exit_usage);

    const std::string ascii = "P3\n1 1\n255\n1 2 3\n";
    write_bytes(dir.file("ascii.ppm"),
                std::span(reinterpret_cast<const std::uint8_t*>(ascii.data()), ascii.size()));
    const auto r = run({"transform", "-k", "5", dir.file("ascii.ppm"), dir.file("o.ppm")});
    CHECK(r.status == cli::exit_failure);
    CHECK(r.err.find("unknown-magic") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.file("o.ppm")));

    CHECK(run({"transform", "-k", "5", dir.file("missing.pgm"), dir.file("o.pgm")}).status ==
          cli::exit_failure);
    // Unwritable destination.
    CHECK(run({"transform", "-k", "5", dir.file("in.pgm"), dir.file("no/such/dir/o.pgm")}).status ==
          cli::exit_failure);
}

TEST_CASE("pack and unpack compose to transform") {
    TempDir dir;
    const auto img = gradient(64, 40, 3);
    pnm::write_file(dir.file("in.ppm"), img);

    const auto packed = run({"pack", "-k", "10", dir.file("in.ppm"), dir.file("x.kmm")});
    REQUIRE(packed.status == 0);
    const auto bytes = read_bytes(dir.file("x.kmm"));
    CHECK(bytes.size() == container::header_size + (64u * 40u * 3u * 5u + 7u) / 8u);
    CHECK(packed.out.find("packed_bytes: " + std::to_string(bytes.size())) != std::string::npos);

    REQUIRE(run({"unpack", dir.file("x.kmm"), dir.file("back.ppm")}).status == 0);
    REQUIRE(run({"transform", "-k", "10", dir.file("in.ppm"), dir.file("t.ppm")}).status == 0);
    CHECK(read_bytes(dir.file("back.ppm")) == read_bytes(dir.file("t.ppm")));
}

TEST_CASE("pack size for a 512x512 gray image at k=10") {
    TempDir dir;
    pnm::write_file(dir.file("big.pgm"), gradient(512, 512, 1));
    REQUIRE(run({"pack", "-k", "10", dir.file("big.pgm"), dir.file("big.kmm")}).status == 0);
    CHECK(fs::file_size(dir.file("big.kmm")) == 163'840 + container::header_size);
}

TEST_CASE("unpack reports container corruption distinctly") {
    TempDir dir;
    std::mt19937 rng(11);
    std::vector<std::uint8_t> noise(300);
    for (auto& b : noise) b = static_cast<std::uint8_t>(rng());
    noise[0] = 'Z';
    write_bytes(dir.file("noise.kmm"), noise);
    auto r = run({"unpack", dir.file("noise.kmm"), dir.file("o.pgm")});
    CHECK(r.status == cli::exit_failure);
    CHECK(r.err.find("bad-magic") != std::string::npos);

    auto good = container::pack(quotient_image(gradient(5, 5, 1), Modulus(3)));
    good.pop_back();
    write_bytes(dir.file("short.kmm"), good);
    r = run({"unpack", dir.file("short.kmm"), dir.file("o.pgm")});
    CHECK(r.status == cli::exit_failure);
    CHECK(r.err.find("truncated-payload") != std::string::npos);
}

TEST_CASE("metrics text and json") {
    TempDir dir;
    const auto img = gradient(20, 20, 3);
    pnm::write_file(dir.file("a.ppm"), img);
    pnm::write_file(dir.file("b.ppm"), transform_image(img, Modulus(5)));

    auto same = run({"metrics", dir.file("a.ppm"), dir.file("a.ppm")});
    REQUIRE(same.status == 0);
    CHECK(same.out.find("psnr_db: inf") != std::string::npos);

    auto json = run({"metrics", "--json", dir.file("a.ppm"), dir.file("a.ppm")});
    REQUIRE(json.status == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["psnr_db"] == "inf");
    CHECK(j["mse"] == 0.0);

    json = run({"metrics", dir.file("a.ppm"), dir.file("b.ppm"), "--json"});
    REQUIRE(json.status == 0);
    j = nlohmann::json::parse(json.out);
    const auto report = compare(img, transform_image(img, Modulus(5)));
    CHECK(j["psnr_db"].get<double>() == doctest::Approx(report.psnr_db));
    CHECK(j["mse"].get<double>() == doctest::Approx(report.mse));
    CHECK(j["per_channel_psnr"].size() == 3);

    pnm::write_file(dir.file("small.ppm"), gradient(10, 20, 3));
    const auto mismatch = run({"metrics", dir.file("a.ppm"), dir.file("small.ppm")});
    CHECK(mismatch.status == cli::exit_failure);
    CHECK(mismatch.err.find("shape-mismatch") != std::string::npos);
}

TEST_CASE("histogram csv") {
    TempDir dir;
    pnm::write_file(dir.file("zero.pgm"), RasterImage::filled(3, 3, 1));
    REQUIRE(run({"histogram", dir.file("zero.pgm"), dir.file("h.csv")}).status == 0);
    const auto lines = split_lines(read_text(dir.file("h.csv")));
    REQUIRE(lines.size() == 257);
    CHECK(lines[0] == "value,channel,count");
    CHECK(lines[1] == "0,0,9");
    CHECK(lines[2] == "1,0,0");
    CHECK(lines[256] == "255,0,0");

    const auto rgb = transform_image(gradient(30, 30, 3), Modulus(7));
    pnm::write_file(dir.file("rgb.ppm"), rgb);
    REQUIRE(run({"histogram", dir.file("rgb.ppm"), dir.file("rgb.csv")}).status == 0);
    const auto rgb_lines = split_lines(read_text(dir.file("rgb.csv")));
    REQUIRE(rgb_lines.size() == 1 + 256 * 3);
    for (std::size_t i = 1; i < rgb_lines.size(); ++i) {
        int value = 0, channel = 0;
        long count = 0;
        REQUIRE(std::sscanf(rgb_lines[i].c_str(), "%d,%d,%ld", &value, &channel, &count) == 3);
        CHECK(value == static_cast<int>((i - 1) % 256));
        CHECK(channel == static_cast<int>((i - 1) / 256));
        if (count != 0) CHECK((value % 7 == 0 || value == 255));
    }
}

TEST_CASE("sweep csv") {
    TempDir dir;
    const auto img = gradient(40, 30, 1);
    pnm::write_file(dir.file("in.pgm"), img);
    REQUIRE(run({"sweep", dir.file("in.pgm"), "2", "20", dir.file("s.csv")}).status == 0);
    const auto text = read_text(dir.file("s.csv"));
    const auto lines = split_lines(text);
    REQUIRE(lines.size() == 20);
    CHECK(lines[0] == "k,psnr_db,mse,bits_per_pixel,levels,quotient_entropy,packed_bytes");
    CHECK(text == cli::sweep_csv(cli::sweep(img, Modulus(2), Modulus(20))));

    for (std::size_t i = 1; i < lines.size(); ++i) {
        int k = 0, bits = 0, lv = 0;
        double db = 0, m = 0, ent = 0;
        unsigned long long packed = 0;
        REQUIRE(std::sscanf(lines[i].c_str(), "%d,%lf,%lf,%d,%d,%lf,%llu", &k, &db, &m, &bits, &lv,
                            &ent, &packed) == 7);
        const auto& row = kmm::testing::published_bit_depth[i - 1];
        CHECK(k == row.k);
        CHECK(bits == row.length);
        CHECK(lv == row.range_max + 1);
        CHECK(packed == container::header_size + (40ull * 30ull * bits + 7) / 8);
        // 4 decimal places reproduce the computed values
        CHECK(m == doctest::Approx(mse(img, transform_image(img, Modulus(k)))).epsilon(1e-4));
        CHECK(db == doctest::Approx(psnr(img, transform_image(img, Modulus(k)))).epsilon(1e-4));
    }

    CHECK(run({"sweep", dir.file("in.pgm"), "9", "3", dir.file("bad.csv")}).status ==
          cli::exit_usage);
    CHECK_FALSE(fs::exists(dir.file("bad.csv")));
    CHECK(run({"sweep", dir.file("in.pgm"), "1", "3", dir.file("bad.csv")}).status ==
          cli::exit_usage);
}

TEST_CASE("commands are deterministic") {
    TempDir dir;
    pnm::write_file(dir.file("in.ppm"), gradient(13, 11, 3));
    for (const char* name : {"a", "b"}) {
        const std::string n(name);
        REQUIRE(run({"pack", "-k", "6", dir.file("in.ppm"), dir.file(n + ".kmm")}).status == 0);
        REQUIRE(run({"sweep", dir.file("in.ppm"), "2", "9", dir.file(n + ".csv")}).status == 0);
    }
    CHECK(read_bytes(dir.file("a.kmm")) == read_bytes(dir.file("b.kmm")));
    CHECK(read_bytes(dir.file("a.csv")) == read_bytes(dir.file("b.csv")));
}

TEST_CASE("help exits successfully") {
    const auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
