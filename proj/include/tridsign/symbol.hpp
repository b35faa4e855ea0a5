#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "tridsign/int_polynomial.hpp"
#include "tridsign/polynomial.hpp"
#include "tridsign/sign_vector.hpp"
#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

/// The m x m symbol a^k(phi) of the m-periodic operator with sub pattern k and
/// super-diagonal ones: zero diagonal, ones above, k_1..k_{m-1} below, plus
/// k_m e^{i phi} at (1, m) and e^{-i phi} at (m, 1). For m <= 2 the corner
/// terms are added onto the entries they overlap.
struct SymbolMatrix {
    SignVector k;
    double phi;
    Eigen::MatrixXcd matrix;
};

SymbolMatrix symbol_matrix(const SignVector& k, double phi);

/// det(a^k(phi) - lambda I) by LU with partial pivoting.
std::complex<double> symbol_char_value(const SignVector& k, double phi, std::complex<double> lambda);

/// The monic degree-m polynomial p with
///   det(a^k(phi) - lambda I) = (-1)^m (p(lambda) - e^{i phi} prod(k) - e^{-i phi}).
struct SymbolPolynomial {
    ComplexPolynomial p;
    IntPolynomial exact;
    int k_product;
    SignVector k;
    /// Largest distance of an interpolated coefficient from its integer.
    double snap_error;
};

inline constexpr double kSnapTolerance = 1e-8;

/// Interpolates (-1)^m det(a^k(0) - lambda I) + prod(k) + 1 at the m + 1
/// roots of unity and snaps to integers. Throws NumericalConsistencyError when
/// the snap distance exceeds kSnapTolerance.
SymbolPolynomial symbol_poly(const SignVector& k);

/// (-1)^m (p(lambda) - e^{i phi} prod(k) - e^{-i phi}), the right-hand side of
/// the symbol identity.
std::complex<double> symbol_char_from_poly(const SymbolPolynomial& sp, double phi,
                                           std::complex<double> lambda);

/// spec(a^k(phi)) with multiplicity, as roots of p - e^{i phi} prod(k) - e^{-i phi}.
std::vector<std::complex<double>> symbol_eigenvalues(const SymbolPolynomial& sp, double phi,
                                                     RootOptions opts = {});
std::vector<std::complex<double>> symbol_eigenvalues(const SignVector& k, double phi,
                                                     RootOptions opts = {});

/// Samples spec(A^k_per) = p^{-1}([-2, 2]) after parity doubling: roots of
/// p - 2 cos(phi_s) for phi_s = pi s / (samples - 1). Tags "per:m=<m>:phi=<phi_s>".
SpectrumCloud periodic_spectrum(const SignVector& k, std::size_t samples, RootOptions opts = {});

}  // namespace tridsign
