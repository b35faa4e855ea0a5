#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tridsign/density.hpp"
#include "tridsign/embed.hpp"
#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

inline constexpr const char* kVersion = "1.0.0";

// Serialized keys are emitted in lexicographic order (std::map-backed object).
using Json = nlohmann::json;

/// "re,im,tag" header, one row per point, 17 significant digits, LF endings.
std::string cloud_to_csv(const SpectrumCloud& cloud);
/// Inverse of cloud_to_csv. Throws ParseError with the offending line number.
SpectrumCloud cloud_from_csv(std::string_view text);

/// {"params": ..., "points": [{"im", "re", "tag"}, ...]}
std::string cloud_to_json(const SpectrumCloud& cloud, const Json& params);

/// Scatter plot of 1px circles over the viewport [-2.2, 2.2]^2.
std::string cloud_to_svg(const SpectrumCloud& cloud, int pixels = 800);

/// Snaps points to a 1e-6 grid and drops repeats (same snapped point and tag).
SpectrumCloud grid_snap_dedup(const SpectrumCloud& cloud, double step = 1e-6);

Json embedding_to_json(const EmbeddingResult& result);
/// Timing fields are left out unless include_timing, so equal inputs give equal bytes.
Json density_to_json(const DensityReport& report, bool include_timing = false);

std::string sha256_hex(std::string_view data);

/// Writes text to path; throws IoError if the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view text);

struct ManifestEntry {
    std::string path;
    std::string sha256;
    std::size_t bytes;
};

struct RunManifest {
    std::string command;
    Json params;
    std::string version = kVersion;
    double wall_seconds = 0.0;
    std::vector<ManifestEntry> outputs;

    void record(const std::filesystem::path& path, std::string_view content);
    Json to_json() const;
};

}  // namespace tridsign
