#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tridsign/polynomial.hpp"
#include "tridsign/sign_vector.hpp"
#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

enum class ParityPolicy { ensure_even, as_given };

/// The nm x nm matrix M: sub-diagonal (k_1..k_m) repeated n times (last entry
/// dropped), super-diagonal ones, corners M(1, nm) = k_m and M(nm, 1) = 1.
/// Block form: B on the diagonal, C above, A below, A and C in the wrap-around
/// corners. Entries that overlap (nm = 2) are summed.
struct BlockCirculant {
    SignVector k;
    std::size_t n;
    Eigen::MatrixXd matrix;

    std::size_t period() const noexcept { return k.size(); }
    std::size_t size() const noexcept { return k.size() * n; }
};

BlockCirculant build_block_circulant(const SignVector& k, std::size_t n,
                                     ParityPolicy parity = ParityPolicy::ensure_even);

struct FactorizationReport {
    bool passed = false;
    double worst_relative_error = 0.0;
    std::size_t samples = 0;
    std::string diagnostic;

    explicit operator bool() const noexcept { return passed; }
};

/// Largest nm accepted by the dense factorization check.
inline constexpr std::size_t kFactorizationMaxSize = 64;

/// Compares det(M - lambda I) against prod_j det(a^k(xi_j) - lambda I),
/// xi_j = 2 pi j / n, at 4 nm deterministic sample points. Passes when every
/// relative error is <= tol.
FactorizationReport circulant_factorization_check(const BlockCirculant& m, double tol = 1e-9);
FactorizationReport circulant_factorization_check(const SignVector& k, std::size_t n,
                                                  double tol = 1e-9);

/// {1, ..., n-1} without n/2.
std::vector<std::size_t> target_indices(std::size_t n);

/// Union of spec(a^k(xi_j)) over target_indices(n), tagged "target:j=<j>".
/// k must have an even number of -1 entries. n = 2 gives an empty cloud with a warning.
SpectrumCloud target_set(const SignVector& k, std::size_t n, RootOptions opts = {});

/// Sub-diagonal of M with its first row and column removed: the sign
/// pattern of the (nm-1) x (nm-1) finite matrix, length nm - 2.
SignVector truncate(const SignVector& k, std::size_t n);

struct TargetCheck {
    std::size_t j;
    std::complex<double> lambda;
    double residual;
};

struct Witness {
    std::size_t j;
    std::complex<double> lambda;
    Eigen::VectorXcd x;
    /// |x_1| / ||x||
    double first_ratio;
    /// ||M x - lambda x|| / ||x||
    double residual;
};

struct EmbeddingResult {
    SignVector k_input = SignVector::ones(1);
    SignVector k_effective = SignVector::ones(1);
    bool parity_doubled = false;
    SignVector l = SignVector::ones(1);
    std::size_t n = 0;
    std::size_t m = 0;
    SpectrumCloud targets;
    /// One entry per target point: |D(lambda)| / S, with S the continuant scale taken
    /// at radius max(|lambda|, 1).
    std::vector<TargetCheck> checks;
    /// Residuals at the excluded indices n/2 and n; reported, never asserted.
    std::vector<TargetCheck> excluded;
    std::vector<Witness> witnesses;
    double tol = 0.0;
    double worst_residual = 0.0;
    bool verified = false;
};

struct EmbedOptions {
    double tol = 1e-8;
    bool want_witness = false;
    RootOptions roots;
};

/// Builds the truncated finite matrix for (ensure_even_parity(k), n) and checks
/// that every target eigenvalue is a root of its characteristic polynomial.
/// Witnesses are eigenvectors of M with first coordinate zero.
/// Throws WitnessDegenerateError if an eigenspace is numerically one-dimensional.
EmbeddingResult verify_embedding(const SignVector& k, std::size_t n, const EmbedOptions& opts = {});

}  // namespace tridsign
