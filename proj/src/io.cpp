#include "tridsign/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <tuple>

#include <openssl/evp.h>

#include "tridsign/error.hpp"

namespace tridsign {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(std::string_view field, std::size_t line) {
    const std::string s(field);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError("line " + std::to_string(line) + ": '" + s + "' is not a number", line);
    return v;
}

const char* tag_color(const std::string& tag) {
    if (tag.rfind("fin", 0) == 0) return "#1f4e99";
    if (tag.rfind("per", 0) == 0) return "#c0392b";
    if (tag.rfind("target", 0) == 0) return "#1e8449";
    return "#333333";
}

}  // namespace

std::string cloud_to_csv(const SpectrumCloud& cloud) {
    std::string out = "re,im,tag\n";
    out.reserve(cloud.size() * 48 + 16);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        out += format_double(cloud.point(i).real());
        out += ',';
        out += format_double(cloud.point(i).imag());
        out += ',';
        out += cloud.tag(i);
        out += '\n';
    }
    return out;
}

SpectrumCloud cloud_from_csv(std::string_view text) {
    SpectrumCloud cloud;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != "re,im,tag") throw ParseError("missing 're,im,tag' header", 1);
            continue;
        }
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected three fields", line_no);
        cloud.add({parse_double(line.substr(0, c1), line_no), parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no)},
                  std::string(line.substr(c2 + 1)));
    }
    if (line_no == 0) throw ParseError("empty CSV", 0);
    return cloud;
}

std::string cloud_to_json(const SpectrumCloud& cloud, const Json& params) {
    Json points = Json::array();
    for (std::size_t i = 0; i < cloud.size(); ++i)
        points.push_back({{"re", cloud.point(i).real()}, {"im", cloud.point(i).imag()}, {"tag", cloud.tag(i)}});
    Json doc = {{"params", params}, {"points", std::move(points)}};
    if (!cloud.warnings().empty()) doc["warnings"] = cloud.warnings();
    return doc.dump(1) + "\n";
}

std::string cloud_to_svg(const SpectrumCloud& cloud, int pixels) {
    constexpr double lo = -2.2, hi = 2.2;
    const double px = static_cast<double>(pixels);
    auto map_x = [&](double x) { return (x - lo) / (hi - lo) * px; };
    auto map_y = [&](double y) { return (hi - y) / (hi - lo) * px; };
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  pixels, pixels, pixels, pixels);
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"0\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n",
                  map_y(0.0), pixels, map_y(0.0));
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\" y2=\"%d\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n",
                  map_x(0.0), map_x(0.0), pixels);
    out += buf;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"0.5\" fill=\"%s\"/>\n",
                      map_x(cloud.point(i).real()), map_y(cloud.point(i).imag()), tag_color(cloud.tag(i)));
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

SpectrumCloud grid_snap_dedup(const SpectrumCloud& cloud, double step) {
    std::map<std::tuple<long long, long long, std::string>, bool> seen;
    SpectrumCloud out;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const long long qx = std::llround(cloud.point(i).real() / step);
        const long long qy = std::llround(cloud.point(i).imag() / step);
        if (!seen.emplace(std::make_tuple(qx, qy, cloud.tag(i)), true).second) continue;
        out.add({static_cast<double>(qx) * step, static_cast<double>(qy) * step}, cloud.tag(i));
    }
    return out;
}

Json embedding_to_json(const EmbeddingResult& r) {
    Json targets = Json::array();
    for (const auto& c : r.checks)
        targets.push_back({{"j", c.j}, {"re", c.lambda.real()}, {"im", c.lambda.imag()}, {"residual", c.residual}});
    Json excluded = Json::array();
    for (const auto& c : r.excluded)
        excluded.push_back({{"j", c.j}, {"re", c.lambda.real()}, {"im", c.lambda.imag()}, {"residual", c.residual}});
    Json doc = {
        {"k", r.k_input.to_string()},
        {"k_effective", r.k_effective.to_string()},
        {"parity_doubled", r.parity_doubled},
        {"l", r.l.to_string()},
        {"n", r.n},
        {"m", r.m},
        {"matrix_size", r.l.size() + 1},
        {"tol", r.tol},
        {"targets", std::move(targets)},
        {"excluded", std::move(excluded)},
        {"worst_residual", r.worst_residual},
        {"verified", r.verified},
    };
    if (!r.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& x : r.witnesses)
            w.push_back({{"j", x.j},
                         {"re", x.lambda.real()},
                         {"im", x.lambda.imag()},
                         {"first_ratio", x.first_ratio},
                         {"residual", x.residual}});
        doc["witnesses"] = std::move(w);
    }
    if (!r.targets.warnings().empty()) doc["warnings"] = r.targets.warnings();
    return doc;
}

Json density_to_json(const DensityReport& r, bool include_timing) {
    auto keyed = [](const auto& m) {
        Json out = Json::array();
        for (const auto& [n, v] : m) out.push_back({{"n", n}, {"value", v}});
        return out;
    };
    Json doc = {
        {"params",
         {{"max_n", r.params.max_n},
          {"max_m", r.params.max_m},
          {"samples", r.params.samples},
          {"disk_step", r.params.disk_step},
          {"cap", r.params.cap},
          {"tol", r.params.roots.tol}}},
        {"periodic_distance", keyed(r.periodic_distance)},
        {"disk_distance", keyed(r.disk_distance)},
        {"sigma_points", keyed(r.sigma_points)},
        {"periodic_points", r.periodic_points},
        {"disk_points", r.disk_points},
        {"monotone", r.monotone},
    };
    if (include_timing)
        doc["timing"] = {{"periodic_seconds", r.seconds_periodic},
                         {"sigma_seconds", r.seconds_sigma},
                         {"distance_seconds", r.seconds_distance}};
    return doc;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.close();
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

void RunManifest::record(const std::filesystem::path& path, std::string_view content) {
    outputs.push_back({path.string(), sha256_hex(content), content.size()});
}

Json RunManifest::to_json() const {
    Json out = Json::array();
    for (const auto& e : outputs) out.push_back({{"path", e.path}, {"sha256", e.sha256}, {"bytes", e.bytes}});
    return {{"command", command},
            {"params", params},
            {"version", version},
            {"wall_seconds", wall_seconds},
            {"outputs", std::move(out)}};
}

}  // namespace tridsign
