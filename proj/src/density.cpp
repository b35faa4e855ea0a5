#include "tridsign/density.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "tridsign/error.hpp"
#include "tridsign/finite.hpp"
#include "tridsign/parallel.hpp"
#include "tridsign/sign_vector.hpp"
#include "tridsign/symbol.hpp"

namespace tridsign {

using Complex = std::complex<double>;

namespace {

double distance(Complex a, Complex b) {
    const double dx = a.real() - b.real();
    const double dy = a.imag() - b.imag();
    return std::sqrt(dx * dx + dy * dy);
}

class BucketGrid {
   public:
    explicit BucketGrid(const std::vector<Complex>& pts) {
        min_x_ = max_x_ = pts[0].real();
        min_y_ = max_y_ = pts[0].imag();
        for (const auto& p : pts) {
            min_x_ = std::min(min_x_, p.real());
            max_x_ = std::max(max_x_, p.real());
            min_y_ = std::min(min_y_, p.imag());
            max_y_ = std::max(max_y_, p.imag());
        }
        const double diam = std::hypot(max_x_ - min_x_, max_y_ - min_y_);
        cell_ = std::max(diam / std::sqrt(static_cast<double>(pts.size())), 1e-6);
        nx_ = static_cast<long>((max_x_ - min_x_) / cell_) + 1;
        ny_ = static_cast<long>((max_y_ - min_y_) / cell_) + 1;

        std::vector<std::size_t> count(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
        std::vector<std::size_t> cell_of(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cell_of[i] = index(cx(pts[i].real()), cy(pts[i].imag()));
            ++count[cell_of[i] + 1];
        }
        for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
        offsets_ = count;
        points_.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) points_[count[cell_of[i]]++] = pts[i];
    }

    double nearest(Complex q) const {
        const long qx = cx(q.real());
        const long qy = cy(q.imag());
        // Chebyshev distance (in cells) from the query cell to the grid.
        const long gap_x = qx < 0 ? -qx : (qx >= nx_ ? qx - nx_ + 1 : 0);
        const long gap_y = qy < 0 ? -qy : (qy >= ny_ ? qy - ny_ + 1 : 0);
        const long r0 = std::max(gap_x, gap_y);
        const long r_max = std::max({qx, nx_ - 1 - qx, qy, ny_ - 1 - qy, r0});

        double best = std::numeric_limits<double>::infinity();
        for (long r = r0; r <= r_max; ++r) {
            // Cells at ring r are at least (r - 1) cells away from the query point.
            if (static_cast<double>(r - 1) * cell_ >= best) break;
            const long y_lo = std::max(qy - r, 0L), y_hi = std::min(qy + r, ny_ - 1);
            for (long y = y_lo; y <= y_hi; ++y) {
                if (y == qy - r || y == qy + r) {
                    const long x_lo = std::max(qx - r, 0L), x_hi = std::min(qx + r, nx_ - 1);
                    for (long x = x_lo; x <= x_hi; ++x) scan(x, y, q, best);
                } else {
                    if (qx - r >= 0 && qx - r < nx_) scan(qx - r, y, q, best);
                    if (r > 0 && qx + r >= 0 && qx + r < nx_) scan(qx + r, y, q, best);
                }
            }
        }
        return best;
    }

   private:
    long cx(double x) const { return static_cast<long>(std::floor((x - min_x_) / cell_)); }
    long cy(double y) const { return static_cast<long>(std::floor((y - min_y_) / cell_)); }
    std::size_t index(long x, long y) const {
        x = std::clamp(x, 0L, nx_ - 1);
        y = std::clamp(y, 0L, ny_ - 1);
        return static_cast<std::size_t>(y * nx_ + x);
    }
    void scan(long x, long y, Complex q, double& best) const {
        const std::size_t c = static_cast<std::size_t>(y * nx_ + x);
        for (std::size_t i = offsets_[c]; i < offsets_[c + 1]; ++i) best = std::min(best, distance(q, points_[i]));
    }

    double min_x_, max_x_, min_y_, max_y_, cell_;
    long nx_, ny_;
    std::vector<std::size_t> offsets_;
    std::vector<Complex> points_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<double> nearest_distances(const std::vector<Complex>& x, const std::vector<Complex>& y,
                                      unsigned threads) {
    if (x.empty() || y.empty()) throw ArgumentError("directed_hausdorff: both clouds must be nonempty");
    const BucketGrid grid(y);
    std::vector<double> out(x.size());
    parallel_chunks(x.size(), resolve_threads(threads), [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = grid.nearest(x[i]);
    });
    return out;
}

double directed_hausdorff(const std::vector<Complex>& x, const std::vector<Complex>& y, unsigned threads) {
    const auto d = nearest_distances(x, y, threads);
    return *std::max_element(d.begin(), d.end());
}

std::vector<Complex> unit_disk_grid(double step) {
    if (!(step > 0.0) || step > 1.0) throw ArgumentError("unit_disk_grid: step must be in (0, 1]");
    const long half = static_cast<long>(std::floor(1.0 / step + 1e-12));
    std::vector<Complex> pts;
    for (long i = -half; i <= half; ++i) {
        const double x = static_cast<double>(i) * step;
        for (long j = -half; j <= half; ++j) {
            const double y = static_cast<double>(j) * step;
            if (x * x + y * y <= 1.0 + 1e-12) pts.emplace_back(x, y);
        }
        const double h = std::sqrt(std::max(0.0, 1.0 - x * x));
        pts.emplace_back(x, h);
        pts.emplace_back(x, -h);
        pts.emplace_back(h, x);
        pts.emplace_back(-h, x);
    }
    std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

SpectrumCloud periodic_union(std::size_t max_m, std::size_t samples, RootOptions opts, unsigned threads) {
    if (max_m < 1 || max_m > kMaxPeriod)
        throw RefusalError("periodic_union: period must be in 1.." + std::to_string(kMaxPeriod));
    std::vector<SignVector> ks;
    for (std::size_t m = 1; m <= max_m; ++m)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            ks.push_back(SignVector::from_bits(mask, m));
    const unsigned workers = resolve_threads(threads);
    std::vector<SpectrumCloud> parts(ks.size());
    parallel_chunks(ks.size(), workers, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) parts[i] = periodic_spectrum(ks[i], samples, opts);
    });
    SpectrumCloud out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

DensityReport density_report(const DensityParams& params) {
    if (params.max_n < 2) throw ArgumentError("density_report: max_n must be >= 2");
    if (params.max_n > params.cap)
        throw RefusalError("density_report: max_n = " + std::to_string(params.max_n) +
                           " exceeds the enumeration cap " + std::to_string(params.cap));
    if (params.max_m < 1 || params.max_m > kMaxPeriod)
        throw RefusalError("density_report: max_m must be in 1.." + std::to_string(kMaxPeriod));
    if (params.samples < 2) throw ArgumentError("density_report: samples must be >= 2");

    DensityReport report;
    report.params = params;

    auto t0 = std::chrono::steady_clock::now();
    const SpectrumCloud periodic = periodic_union(params.max_m, params.samples, params.roots, params.threads);
    report.periodic_points = periodic.size();
    report.seconds_periodic = seconds_since(t0);

    const std::vector<Complex> disk = unit_disk_grid(params.disk_step);
    report.disk_points = disk.size();

    EnumerateOptions eo;
    eo.roots = params.roots;
    eo.cap = params.cap;
    eo.threads = params.threads;

    std::vector<Complex> sigma;
    for (std::size_t n = 1; n <= params.max_n; ++n) {
        t0 = std::chrono::steady_clock::now();
        const SpectrumCloud level = enumerate_sigma(n, eo);
        sigma.insert(sigma.end(), level.points().begin(), level.points().end());
        report.seconds_sigma += seconds_since(t0);
        if (n < 2) continue;
        t0 = std::chrono::steady_clock::now();
        report.sigma_points[n] = sigma.size();
        report.periodic_distance[n] = directed_hausdorff(periodic.points(), sigma, params.threads);
        report.disk_distance[n] = directed_hausdorff(disk, sigma, params.threads);
        report.seconds_distance += seconds_since(t0);
    }

    report.monotone = true;
    for (auto it = std::next(report.periodic_distance.begin()); it != report.periodic_distance.end(); ++it)
        if (it->second > std::prev(it)->second + kMonotoneSlack) report.monotone = false;
    for (auto it = std::next(report.disk_distance.begin()); it != report.disk_distance.end(); ++it)
        if (it->second > std::prev(it)->second + kMonotoneSlack) report.monotone = false;
    return report;
}

}  // namespace tridsign
