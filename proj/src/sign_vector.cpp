#include "tridsign/sign_vector.hpp"

#include <bit>

#include "tridsign/error.hpp"

namespace tridsign {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

SignVector::SignVector(std::size_t n) : words_(word_count(n), 0), size_(n) {
    if (n == 0) throw DimensionError("sign vector must have length >= 1");
}

SignVector::SignVector(std::initializer_list<int> signs)
    : SignVector(std::vector<int>(signs)) {}

SignVector::SignVector(const std::vector<int>& signs) : SignVector(signs.size()) {
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw ArgumentError("sign vector entry " + std::to_string(i) + " is not +1 or -1");
        set(i, signs[i]);
    }
}

SignVector SignVector::from_bits(std::uint64_t mask, std::size_t n) {
    if (n == 0 || n > 64) throw DimensionError("from_bits needs 1 <= n <= 64");
    SignVector v(n);
    v.words_[0] = (n == 64) ? mask : (mask & ((std::uint64_t{1} << n) - 1));
    return v;
}

void SignVector::set(std::size_t i, int sign) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (sign < 0)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

std::size_t SignVector::minus_count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

SignVector SignVector::concat(const SignVector& other) const {
    SignVector out(size_ + other.size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, (*this)[i]);
    for (std::size_t i = 0; i < other.size_; ++i) out.set(size_ + i, other[i]);
    return out;
}

SignVector SignVector::repeated(std::size_t times) const {
    if (times == 0) throw DimensionError("repeat count must be >= 1");
    SignVector out(size_ * times);
    for (std::size_t r = 0; r < times; ++r)
        for (std::size_t i = 0; i < size_; ++i) out.set(r * size_ + i, (*this)[i]);
    return out;
}

SignVector SignVector::reversed() const {
    SignVector out(size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, (*this)[size_ - 1 - i]);
    return out;
}

std::vector<int> SignVector::to_ints() const {
    std::vector<int> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
    return out;
}

std::string SignVector::to_string() const {
    std::string s(size_, '+');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i] < 0) s[i] = '-';
    return s;
}

SignVector parse_sign_vector(std::string_view text) {
    if (text.empty()) throw ParseError("empty sign string", 0);
    SignVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+':
                break;
            case '-':
                v.set(i, -1);
                break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[i]) +
                                     "' at index " + std::to_string(i) + " (expected '+' or '-')",
                                 i);
        }
    }
    return v;
}

TridiagSignMatrix::TridiagSignMatrix(SignVector sub_, SignVector super_)
    : sub(std::move(sub_)), super(std::move(super_)) {
    if (sub.size() != super.size())
        throw DimensionError("sub- and super-diagonal lengths differ (" +
                             std::to_string(sub.size()) + " vs " +
                             std::to_string(super.size()) + ")");
}

TridiagSignMatrix::TridiagSignMatrix(SignVector sub_)
    : sub(std::move(sub_)), super(SignVector::ones(sub.size())) {}

PeriodicOperatorSpec::PeriodicOperatorSpec(SignVector k_, SignVector l_)
    : k(std::move(k_)), l(std::move(l_)) {
    if (k.size() != l.size())
        throw DimensionError("periodic k and l must share the period length");
}

Eigen::MatrixXcd dense_matrix(const TridiagSignMatrix& t) {
    const auto n = static_cast<Eigen::Index>(t.dimension());
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = static_cast<double>(t.super[static_cast<std::size_t>(i)]);
        a(i + 1, i) = static_cast<double>(t.sub[static_cast<std::size_t>(i)]);
    }
    return a;
}

std::vector<int> gauge_diagonal(const SignVector& l) {
    std::vector<int> d(l.size() + 1);
    d[0] = 1;
    for (std::size_t i = 0; i < l.size(); ++i) d[i + 1] = d[i] * l[i];
    return d;
}

SignVector gauge_normalize_finite(const SignVector& k, const SignVector& l) {
    if (k.size() != l.size())
        throw DimensionError("gauge_normalize_finite: |k| = " + std::to_string(k.size()) +
                             " but |l| = " + std::to_string(l.size()));
    SignVector out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out.set(i, k[i] * l[i]);
    return out;
}

PeriodicOperatorSpec gauge_normalize_periodic(const PeriodicOperatorSpec& spec) {
    if (spec.l.product() > 0)
        return {gauge_normalize_finite(spec.k, spec.l), SignVector::ones(spec.period())};
    const SignVector k2 = spec.k.repeated(2);
    const SignVector l2 = spec.l.repeated(2);
    return {gauge_normalize_finite(k2, l2), SignVector::ones(k2.size())};
}

SignVector ensure_even_parity(const SignVector& k) {
    if (k.minus_count() % 2 == 0) return k;
    return k.repeated(2);
}

}  // namespace tridsign
