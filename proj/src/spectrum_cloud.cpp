#include "tridsign/spectrum_cloud.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace tridsign {

std::uint32_t SpectrumCloud::intern(const std::string& tag) {
    if (!tags_.empty() && tags_.back() == tag) return static_cast<std::uint32_t>(tags_.size() - 1);
    for (std::size_t i = 0; i < tags_.size(); ++i)
        if (tags_[i] == tag) return static_cast<std::uint32_t>(i);
    tags_.push_back(tag);
    return static_cast<std::uint32_t>(tags_.size() - 1);
}

void SpectrumCloud::add(Point z, std::uint32_t tag_id) {
    points_.push_back(z);
    tag_ids_.push_back(tag_id);
}

void SpectrumCloud::merge(const SpectrumCloud& other) {
    std::vector<std::uint32_t> remap(other.tags_.size());
    for (std::size_t i = 0; i < other.tags_.size(); ++i) remap[i] = intern(other.tags_[i]);
    reserve(size() + other.size());
    for (std::size_t i = 0; i < other.size(); ++i) add(other.points_[i], remap[other.tag_ids_[i]]);
    warnings_.insert(warnings_.end(), other.warnings_.begin(), other.warnings_.end());
}

void SpectrumCloud::sort() {
    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_tuple(points_[a].real(), points_[a].imag(), std::cref(tags_[tag_ids_[a]])) <
               std::make_tuple(points_[b].real(), points_[b].imag(), std::cref(tags_[tag_ids_[b]]));
    });
    std::vector<Point> p(points_.size());
    std::vector<std::uint32_t> t(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        p[i] = points_[order[i]];
        t[i] = tag_ids_[order[i]];
    }
    points_ = std::move(p);
    tag_ids_ = std::move(t);
}

bool multiset_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol) {
    if (a.size() != b.size()) return false;
    auto by_re = [](const auto& x, const auto& y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    };
    std::sort(a.begin(), a.end(), by_re);
    std::sort(b.begin(), b.end(), by_re);
    std::vector<bool> used(b.size(), false);
    std::size_t lo = 0;
    for (const auto& z : a) {
        while (lo < b.size() && (used[lo] || b[lo].real() < z.real() - tol)) ++lo;
        bool found = false;
        for (std::size_t j = lo; j < b.size() && b[j].real() <= z.real() + tol; ++j) {
            if (!used[j] && std::abs(b[j] - z) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace tridsign
