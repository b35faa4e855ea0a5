#include "tridsign/finite.hpp"

#include <algorithm>

#include <bit>
#include <cmath>

#include "tridsign/error.hpp"
#include "tridsign/parallel.hpp"

namespace tridsign {

using Complex = std::complex<double>;

IntPolynomial charpoly_finite(const SignVector& k) {
    if (k.size() > kExactCharpolyMax)
        throw RefusalError("charpoly_finite: exact coefficients are limited to n <= " +
                           std::to_string(kExactCharpolyMax) + "; use charpoly_eval_at");
    const IntPolynomial minus_lambda{0, -1};
    IntPolynomial prev{1};
    IntPolynomial cur = minus_lambda;
    for (std::size_t j = 0; j < k.size(); ++j) {
        IntPolynomial next = minus_lambda * cur - BigInt(k[j]) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Evaluation charpoly_eval_at(const SignVector& k, Complex lambda, double radius_floor) {
    const double a = std::max(std::abs(lambda), radius_floor);
    Complex prev{1.0};
    Complex cur = -lambda;
    double s_prev = 1.0;
    double s_cur = a;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const Complex next = -lambda * cur - static_cast<double>(k[j]) * prev;
        const double s_next = a * s_cur + s_prev;
        prev = cur;
        cur = next;
        s_prev = s_cur;
        s_cur = s_next;
    }
    return {cur, s_cur};
}

namespace {

std::string fin_tag(std::size_t n) { return "fin:n=" + std::to_string(n); }

std::uint64_t reverse_bits(std::uint64_t mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) out |= std::uint64_t{1} << (n - 1 - i);
    return out;
}

}  // namespace

SpectrumCloud finite_eigenvalues(const SignVector& k, RootOptions opts) {
    SpectrumCloud cloud;
    const auto id = cloud.intern(fin_tag(k.size()));
    for (const auto& z : roots(charpoly_finite(k).to_complex(), opts)) cloud.add(z, id);
    return cloud;
}

SpectrumCloud enumerate_sigma(std::size_t n, const EnumerateOptions& opts) {
    if (n < 1) throw ArgumentError("enumerate_sigma: n must be >= 1");
    if (n > opts.cap)
        throw RefusalError("enumerate_sigma: n = " + std::to_string(n) + " exceeds the cap " +
                           std::to_string(opts.cap) + " (raise it with --cap)");
    if (n > 40) throw RefusalError("enumerate_sigma: n above 40 is not enumerable");

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned workers = resolve_threads(opts.threads);
    std::vector<std::vector<Complex>> partial(workers);

    parallel_chunks(total, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& out = partial[w];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            int copies = 1;
            if (opts.canonical_reversal) {
                const std::uint64_t rev = reverse_bits(mask, n);
                if (rev < mask) continue;
                copies = (rev == mask) ? 1 : 2;
            }
            const SignVector k = SignVector::from_bits(mask, n);
            const auto r = roots(charpoly_finite(k).to_complex(), opts.roots);
            for (int c = 0; c < copies; ++c) out.insert(out.end(), r.begin(), r.end());
        }
    });

    std::vector<Complex> all;
    all.reserve(total * (n + 1));
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    std::stable_sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });

    SpectrumCloud cloud;
    cloud.reserve(all.size());
    const auto id = cloud.intern(fin_tag(n));
    for (const auto& z : all) cloud.add(z, id);
    return cloud;
}

SpectrumCloud enumerate_sigma_accumulated(std::size_t n, const EnumerateOptions& opts) {
    SpectrumCloud cloud;
    for (std::size_t size = 1; size <= n; ++size) cloud.merge(enumerate_sigma(size, opts));
    cloud.sort();
    return cloud;
}

}  // namespace tridsign
