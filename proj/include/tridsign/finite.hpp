#pragma once

#include <complex>
#include <cstddef>

#include "tridsign/int_polynomial.hpp"
#include "tridsign/polynomial.hpp"
#include "tridsign/sign_vector.hpp"
#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

/// Largest n for which exact continuant coefficients are produced.
inline constexpr std::size_t kExactCharpolyMax = 64;

/// det(A - lambda I) for the (n+1)x(n+1) matrix with sub-diagonal k and
/// super-diagonal ones: D_0 = 1, D_1 = -lambda, D_{j+1} = -lambda D_j - k_j D_{j-1}.
IntPolynomial charpoly_finite(const SignVector& k);

/// The same recursion run numerically at one point. scale follows
/// S_0 = 1, S_1 = |lambda|, S_{j+1} = |lambda| S_j + S_{j-1}.
/// With radius_floor > 0 the scale uses max(|lambda|, radius_floor) instead of
/// |lambda|, which keeps residuals meaningful for roots near zero.
Evaluation charpoly_eval_at(const SignVector& k, std::complex<double> lambda, double radius_floor = 0.0);

/// Eigenvalues of A^{k,ones}_fin, tagged "fin:n=<|k|>".
SpectrumCloud finite_eigenvalues(const SignVector& k, RootOptions opts = {});

struct EnumerateOptions {
    RootOptions roots;
    std::size_t cap = 16;
    unsigned threads = 0;
    /// Solve only one of each (k, reverse(k)) pair; the reversed matrix is
    /// similar to the transpose, so the multiset is unchanged.
    bool canonical_reversal = false;
};

/// Union of finite_eigenvalues(k) over all 2^n sign vectors, sorted by (re, im).
/// Throws RefusalError for n above opts.cap.
SpectrumCloud enumerate_sigma(std::size_t n, const EnumerateOptions& opts = {});

/// Union of enumerate_sigma(n') for n' = 1..n.
SpectrumCloud enumerate_sigma_accumulated(std::size_t n, const EnumerateOptions& opts = {});

}  // namespace tridsign
