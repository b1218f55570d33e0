#include "kmm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmm/container.hpp"
#include "kmm/error.hpp"
#include "kmm/file_io.hpp"
#include "kmm/metrics.hpp"
#include "kmm/pnm.hpp"
#include "kmm/transform.hpp"

namespace kmm::cli {
namespace {

std::string fixed4(double v) { return format_decibels(v, 4); }

nlohmann::json decibels_json(double db) {
    if (std::isinf(db)) return "inf";
    return db;
}

void print_report(std::ostream& out, const QualityReport& report) {
    out << "mse: " << fixed4(report.mse) << "\n";
    out << "psnr_db: " << fixed4(report.psnr_db) << "\n";
    if (report.per_channel_psnr.size() > 1) {
        out << "per_channel_psnr:";
        for (const auto db : report.per_channel_psnr) out << " " << fixed4(db);
        out << "\n";
    }
}

std::string report_json(const QualityReport& report) {
    nlohmann::json j;
    j["mse"] = report.mse;
    j["psnr_db"] = decibels_json(report.psnr_db);
    auto channels = nlohmann::json::array();
    for (const auto db : report.per_channel_psnr) channels.push_back(decibels_json(db));
    j["per_channel_psnr"] = channels;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    write_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

struct Options {
    int k = 0;
    int k_min = 0;
    int k_max = 0;
    bool json = false;
    std::string input;
    std::string second;
    std::string output;
};

int cmd_transform(const Options& opt, std::ostream& out) {
    const auto original = pnm::read_file(opt.input);
    const auto transformed = transform_image(original, Modulus(opt.k));
    pnm::write_file(opt.output, transformed);
    print_report(out, compare(original, transformed));
    return exit_ok;
}

int cmd_pack(const Options& opt, std::ostream& out) {
    const Modulus k(opt.k);
    const auto original = pnm::read_file(opt.input);
    const auto packed = container::pack(quotient_image(original, k));
    write_bytes(opt.output, packed);
    out << "k: " << k.value() << "\n"
        << "bits_per_pixel: " << bits_per_pixel(k) << "\n"
        << "packed_bytes: " << packed.size() << "\n";
    return exit_ok;
}

int cmd_unpack(const Options& opt, std::ostream& out) {
    const auto qimage = container::unpack(read_bytes(opt.input));
    pnm::write_file(opt.output, reconstruct(qimage));
    out << "k: " << qimage.modulus().value() << "\n"
        << "width: " << qimage.width() << "\n"
        << "height: " << qimage.height() << "\n"
        << "channels: " << qimage.channels() << "\n";
    return exit_ok;
}

int cmd_metrics(const Options& opt, std::ostream& out) {
    const auto report = compare(pnm::read_file(opt.input), pnm::read_file(opt.second));
    if (opt.json)
        out << report_json(report);
    else
        print_report(out, report);
    return exit_ok;
}

int cmd_histogram(const Options& opt) {
    write_text(opt.output, histogram_csv(pnm::read_file(opt.input)));
    return exit_ok;
}

int cmd_sweep(const Options& opt, std::ostream& err) {
    if (opt.k_min > opt.k_max) {
        err << "error: k-min (" << opt.k_min << ") must not exceed k-max (" << opt.k_max
            << ")\n";
        return exit_usage;
    }
    const auto rows = sweep(pnm::read_file(opt.input), Modulus(opt.k_min), Modulus(opt.k_max));
    write_text(opt.output, sweep_csv(rows));
    return exit_ok;
}

} // namespace

std::vector<SweepRow> sweep(const RasterImage& original, Modulus k_min, Modulus k_max) {
    std::vector<SweepRow> rows;
    for (int kv = k_min.value(); kv <= k_max.value(); ++kv) {
        const Modulus k(kv);
        const auto qimage = quotient_image(original, k);
        const auto error = mse(original, reconstruct(qimage));
        rows.push_back(SweepRow{
            .k = kv,
            .psnr_db = psnr_from_mse(error),
            .mse = error,
            .bits_per_pixel = bits_per_pixel(k),
            .levels = levels(k),
            .quotient_entropy = pooled_entropy(histogram(qimage)),
            .packed_bytes = container::pack(qimage).size(),
        });
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream csv;
    csv << "k,psnr_db,mse,bits_per_pixel,levels,quotient_entropy,packed_bytes\n";
    for (const auto& r : rows)
        csv << r.k << "," << fixed4(r.psnr_db) << "," << fixed4(r.mse) << ","
            << r.bits_per_pixel << "," << r.levels << "," << fixed4(r.quotient_entropy) << ","
            << r.packed_bytes << "\n";
    return csv.str();
}

std::string histogram_csv(const RasterImage& image) {
    const auto h = histogram(image);
    std::ostringstream csv;
    csv << "value,channel,count\n";
    for (std::uint32_t c = 0; c < h.channels(); ++c)
        for (int v = 0; v < 256; ++v) csv << v << "," << c << "," << h.counts[c][v] << "\n";
    return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-modulus image quantization: transform, pack, and measure 8-bit images",
                 "kmm"};
    app.require_subcommand(1);
    Options opt;

    const auto k_range = CLI::Range(Modulus::min_value, Modulus::max_value);

    auto* transform = app.add_subcommand("transform", "Quantize every sample to a multiple of k");
    transform->add_option("-k,--k", opt.k, "divisor")->required()->check(k_range);
    transform->add_option("input", opt.input, "input PGM/PPM")->required();
    transform->add_option("output", opt.output, "output PGM/PPM")->required();

    auto* pack = app.add_subcommand("pack", "Write the bit-packed KMM1 container");
    pack->add_option("-k,--k", opt.k, "divisor")->required()->check(k_range);
    pack->add_option("input", opt.input, "input PGM/PPM")->required();
    pack->add_option("output", opt.output, "output KMM1 file")->required();

    auto* unpack = app.add_subcommand("unpack", "Reconstruct a PGM/PPM from a KMM1 container");
    unpack->add_option("input", opt.input, "input KMM1 file")->required();
    unpack->add_option("output", opt.output, "output PGM/PPM")->required();

    auto* metrics = app.add_subcommand("metrics", "MSE and PSNR between two images");
    metrics->add_option("a", opt.input, "first PGM/PPM")->required();
    metrics->add_option("b", opt.second, "second PGM/PPM")->required();
    metrics->add_flag("--json", opt.json, "emit JSON");

    auto* hist = app.add_subcommand("histogram", "Per-channel 256-bin histogram as CSV");
    hist->add_option("input", opt.input, "input PGM/PPM")->required();
    hist->add_option("output", opt.output, "output CSV")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "PSNR, size and entropy for a range of k");
    sweep_cmd->add_option("input", opt.input, "input PGM/PPM")->required();
    sweep_cmd->add_option("k_min", opt.k_min, "smallest k")->required()->check(k_range);
    sweep_cmd->add_option("k_max", opt.k_max, "largest k")->required()->check(k_range);
    sweep_cmd->add_option("output", opt.output, "output CSV")->required();

    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (transform->parsed()) return cmd_transform(opt, out);
        if (pack->parsed()) return cmd_pack(opt, out);
        if (unpack->parsed()) return cmd_unpack(opt, out);
        if (metrics->parsed()) return cmd_metrics(opt, out);
        if (hist->parsed()) return cmd_histogram(opt);
        if (sweep_cmd->parsed()) return cmd_sweep(opt, err);
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace kmm::cli
