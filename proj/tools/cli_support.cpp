#include "cli_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bfcli {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string Manifest::to_json() const {
    // hand-rolled with sorted keys so the digest is stable
    std::ostringstream os;
    os << "{\"inputs\":{";
    bool first = true;
    for (const auto& [path, digest] : input_digests) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(path) << "\":\"" << digest << "\"";
    }
    os << "},\"outputs\":[";
    first = true;
    for (const auto& path : outputs) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(path) << "\"";
    }
    os << "],\"parameters\":{";
    first = true;
    for (const auto& [key, value] : parameters) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(key) << "\":\"" << json_escape(value) << "\"";
    }
    os << "},\"seed\":" << seed << ",\"subcommand\":\"" << json_escape(subcommand)
       << "\",\"tool\":\"bellforge\",\"version\":\"" << json_escape(version) << "\"}";
    return os.str();
}

std::string Manifest::digest() const { return hex64(fnv1a64(to_json())); }

std::string csv_table(const Manifest& m, const std::string& index_name,
                      const std::vector<std::int64_t>& index, const std::vector<Column>& cols) {
    std::ostringstream os;
    os << "# manifest=" << m.digest() << "\n";
    os << index_name;
    for (const auto& c : cols) os << "," << c.name;
    os << "\n";
    for (size_t i = 0; i < index.size(); ++i) {
        os << index[i];
        for (const auto& c : cols) os << "," << format17(c.values[i]);
        os << "\n";
    }
    return os.str();
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string svg_loglog_plot(const Manifest& m, const std::string& title,
                            const std::string& x_label, const std::string& y_label,
                            const std::vector<double>& xs, const std::vector<double>& ys) {
    const double width = 640, height = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;
    double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log10(xs[i]);
        const double ly = std::log10(ys[i]);
        lx_min = std::min(lx_min, lx);
        lx_max = std::max(lx_max, lx);
        ly_min = std::min(ly_min, ly);
        ly_max = std::max(ly_max, ly);
    }
    if (lx_max <= lx_min) lx_max = lx_min + 1;
    if (ly_max <= ly_min) ly_max = ly_min + 1;
    auto px = [&](double lx) { return ml + (lx - lx_min) / (lx_max - lx_min) * (width - ml - mr); };
    auto py = [&](double ly) {
        return height - mb - (ly - ly_min) / (ly_max - ly_min) * (height - mt - mb);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
          "viewBox=\"0 0 640 480\">\n";
    os << "<!-- manifest=" << m.digest() << " -->\n";
    os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    os << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
          "font-size=\"14\">"
       << title << "</text>\n";
    // axes
    os << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(height - mb) << "\" x2=\""
       << coord(width - mr) << "\" y2=\"" << coord(height - mb)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(mt) << "\" x2=\"" << coord(ml)
       << "\" y2=\"" << coord(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // decade ticks
    for (int e = int(std::ceil(lx_min)); e <= int(std::floor(lx_max)); ++e) {
        const double x = px(e);
        os << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(height - mb) << "\" x2=\""
           << coord(x) << "\" y2=\"" << coord(height - mb + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << coord(x) << "\" y=\"" << coord(height - mb + 18)
           << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">1e" << e
           << "</text>\n";
    }
    for (int e = int(std::ceil(ly_min)); e <= int(std::floor(ly_max)); ++e) {
        const double y = py(e);
        os << "<line x1=\"" << coord(ml - 5) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(ml)
           << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << coord(ml - 8) << "\" y=\"" << coord(y + 4)
           << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">1e" << e
           << "</text>\n";
    }
    os << "<text x=\"" << coord((ml + width - mr) / 2) << "\" y=\"" << coord(height - 12)
       << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" << x_label
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << coord((mt + height - mb) / 2)
       << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
          "transform=\"rotate(-90 16 "
       << coord((mt + height - mb) / 2) << ")\">" << y_label << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << " ";
        os << coord(px(std::log10(xs[i]))) << "," << coord(py(std::log10(ys[i])));
    }
    os << "\"/>\n";
    for (size_t i = 0; i < xs.size(); ++i)
        os << "<circle cx=\"" << coord(px(std::log10(xs[i]))) << "\" cy=\""
           << coord(py(std::log10(ys[i]))) << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(bytes.data(), std::streamsize(bytes.size()));
    if (!f) throw std::runtime_error("short write: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::vector<std::int64_t> parse_d_list(const std::string& spec) {
    std::vector<std::int64_t> out;
    std::istringstream is(spec);
    std::string token;
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoll(token));
    }
    if (out.empty()) throw std::runtime_error("empty d list");
    return out;
}

std::vector<std::int64_t> parse_d_range(const std::string& spec) {
    std::int64_t lo = 0, hi = 0, factor = 2;
    std::istringstream is(spec);
    std::string token;
    std::vector<std::string> parts;
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() < 2 || parts.size() > 3) throw std::runtime_error("d range must be lo:hi[:factor]");
    lo = std::stoll(parts[0]);
    hi = std::stoll(parts[1]);
    if (parts.size() == 3) factor = std::stoll(parts[2]);
    if (lo < 1 || hi < lo || factor < 2) throw std::runtime_error("bad d range");
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; d *= factor) out.push_back(d);
    return out;
}

}  // namespace bfcli
