#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Formatting and manifest helpers for the bellforge CLI. Everything here is
// deterministic: a rerun with an equal manifest produces byte-identical
// output files.

namespace bfcli {

std::string format17(double v);  // 17 significant digits

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// Manifest of one CLI run: subcommand, canonical parameter map, seed, tool
// version, digests of input files, output paths. The digest of the manifest
// body is embedded into every output file.
struct Manifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string version;
    std::map<std::string, std::string> input_digests;  // path -> fnv1a hex
    std::vector<std::string> outputs;

    std::string to_json() const;
    std::string digest() const;  // fnv1a64 over to_json()
};

struct Column {
    std::string name;
    std::vector<double> values;
};

// CSV layout: "# manifest=<digest>" comment line, header row, then rows of
// 17-significant-digit decimals. The leading column holds integer indices.
std::string csv_table(const Manifest& m, const std::string& index_name,
                      const std::vector<std::int64_t>& index, const std::vector<Column>& cols);

// Minimal static SVG line plot (log-log), no external dependencies.
std::string svg_loglog_plot(const Manifest& m, const std::string& title,
                            const std::string& x_label, const std::string& y_label,
                            const std::vector<double>& xs, const std::vector<double>& ys);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

std::vector<std::int64_t> parse_d_list(const std::string& spec);
std::vector<std::int64_t> parse_d_range(const std::string& spec);  // "lo:hi[:factor]"

}  // namespace bfcli
