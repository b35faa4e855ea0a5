#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tridsign {

/// A multiset of complex points, each carrying one provenance tag
/// ("fin:n=12", "per:m=4:phi=0.196", "target:j=3", ...). Tags are interned.
class SpectrumCloud {
   public:
    using Point = std::complex<double>;

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::string& tag(std::size_t i) const { return tags_[tag_ids_[i]]; }

    /// Returns an id for `tag`, reusing the last id when the tag repeats.
    std::uint32_t intern(const std::string& tag);
    void add(Point z, std::uint32_t tag_id);
    void add(Point z, const std::string& tag) { add(z, intern(tag)); }

    /// Multiset union; tags are carried over.
    void merge(const SpectrumCloud& other);

    /// Stable sort by (re, im, tag).
    void sort();

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void warn(std::string message) { warnings_.push_back(std::move(message)); }

    void reserve(std::size_t n) {
        points_.reserve(n);
        tag_ids_.reserve(n);
    }

   private:
    std::vector<Point> points_;
    std::vector<std::uint32_t> tag_ids_;
    std::vector<std::string> tags_;
    std::vector<std::string> warnings_;
};

/// Greedy bipartite matching of two multisets: true iff |a| == |b| and every
/// point of a can be paired with a distinct point of b within tol.
bool multiset_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol);

}  // namespace tridsign
