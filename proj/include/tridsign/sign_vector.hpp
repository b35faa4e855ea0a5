#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace tridsign {

/// A finite sequence over {+1, -1}, packed one bit per entry (+1 is bit 0).
class SignVector {
   public:
    /// All-plus vector of length n (n >= 1).
    explicit SignVector(std::size_t n);
    SignVector(std::initializer_list<int> signs);
    explicit SignVector(const std::vector<int>& signs);

    /// Low n bits of mask; bit i set means entry i is -1. Requires 1 <= n <= 64.
    static SignVector from_bits(std::uint64_t mask, std::size_t n);
    static SignVector ones(std::size_t n) { return SignVector(n); }

    std::size_t size() const noexcept { return size_; }
    int operator[](std::size_t i) const noexcept {
        return ((words_[i / 64] >> (i % 64)) & 1u) ? -1 : 1;
    }
    void set(std::size_t i, int sign);

    std::size_t minus_count() const noexcept;
    int product() const noexcept { return (minus_count() % 2 == 0) ? 1 : -1; }

    /// Low 64 entries as a mask (for enumeration bookkeeping).
    std::uint64_t low_bits() const noexcept { return words_.empty() ? 0 : words_[0]; }

    SignVector concat(const SignVector& other) const;
    SignVector repeated(std::size_t times) const;
    SignVector reversed() const;
    std::vector<int> to_ints() const;
    std::string to_string() const;

    friend bool operator==(const SignVector& a, const SignVector& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

   private:
    SignVector() = default;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Parses a '+'/'-' string; ParseError names the first offending position.
SignVector parse_sign_vector(std::string_view text);

/// The (n+1)x(n+1) matrix with `sub` below and `super` above a zero diagonal.
struct TridiagSignMatrix {
    SignVector sub;
    SignVector super;

    TridiagSignMatrix(SignVector sub_, SignVector super_);
    /// Super-diagonal of ones.
    explicit TridiagSignMatrix(SignVector sub_);

    std::size_t dimension() const noexcept { return sub.size() + 1; }
};

/// The m-periodic bi-infinite operator with sub pattern k and super pattern l.
struct PeriodicOperatorSpec {
    SignVector k;
    SignVector l;

    PeriodicOperatorSpec(SignVector k_, SignVector l_);
    std::size_t period() const noexcept { return k.size(); }
};

Eigen::MatrixXcd dense_matrix(const TridiagSignMatrix& t);

/// Moves every sign onto the sub-diagonal: k~_i = k_i * l_i. The matrix
/// (k~, ones) equals D^-1 A D with D = diag(d), d_1 = 1, d_{i+1} = d_i * l_i.
SignVector gauge_normalize_finite(const SignVector& k, const SignVector& l);

/// The gauge diagonal used above, returned for tests and diagnostics.
std::vector<int> gauge_diagonal(const SignVector& l);

/// Periodic counterpart. When prod(l) = -1 the period is doubled first so a
/// periodic gauge exists; the result always has super-diagonal all ones.
PeriodicOperatorSpec gauge_normalize_periodic(const PeriodicOperatorSpec& spec);

/// k if it has an even number of -1 entries, otherwise k concatenated with itself.
SignVector ensure_even_parity(const SignVector& k);

}  // namespace tridsign
