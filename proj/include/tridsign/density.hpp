#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "tridsign/polynomial.hpp"
#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

/// For each x, min over y in Y of |x - y|.
std::vector<double> nearest_distances(const std::vector<std::complex<double>>& x,
                                      const std::vector<std::complex<double>>& y, unsigned threads = 1);

/// max over x in X of min over y in Y of |x - y|, with Y bucketed on a uniform
/// grid. The search visits every cell that could hold a closer point, so the
/// result equals the brute-force double loop bit for bit.
double directed_hausdorff(const std::vector<std::complex<double>>& x,
                          const std::vector<std::complex<double>>& y, unsigned threads = 1);

inline double directed_hausdorff(const SpectrumCloud& x, const SpectrumCloud& y, unsigned threads = 1) {
    return directed_hausdorff(x.points(), y.points(), threads);
}

/// Square lattice of the given step inside the closed unit disk, plus the
/// points where lattice lines meet the unit circle.
std::vector<std::complex<double>> unit_disk_grid(double step);

/// Union of periodic_spectrum(k, samples) over every k of period 1..max_m.
SpectrumCloud periodic_union(std::size_t max_m, std::size_t samples, RootOptions opts = {},
                             unsigned threads = 0);

inline constexpr std::size_t kMaxPeriod = 10;

struct DensityParams {
    std::size_t max_n = 8;
    std::size_t max_m = 4;
    std::size_t samples = 256;
    double disk_step = 0.25;
    std::size_t cap = 16;
    unsigned threads = 0;
    RootOptions roots;
};

struct DensityReport {
    DensityParams params;
    /// d(periodic cloud -> sigma_{<=n}) for n = 2..max_n
    std::map<std::size_t, double> periodic_distance;
    /// d(unit disk grid -> sigma_{<=n})
    std::map<std::size_t, double> disk_distance;
    std::map<std::size_t, std::size_t> sigma_points;
    std::size_t periodic_points = 0;
    std::size_t disk_points = 0;
    bool monotone = false;
    double seconds_periodic = 0.0;
    double seconds_sigma = 0.0;
    double seconds_distance = 0.0;
};

/// Slack allowed when checking that distances do not increase with n.
inline constexpr double kMonotoneSlack = 1e-12;

/// Throws RefusalError when max_n exceeds cap or max_m exceeds kMaxPeriod.
DensityReport density_report(const DensityParams& params);

}  // namespace tridsign
