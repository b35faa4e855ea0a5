#include "tridsign/symbol.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "tridsign/error.hpp"

namespace tridsign {

using Complex = std::complex<double>;

SymbolMatrix symbol_matrix(const SignVector& k, double phi) {
    const auto m = static_cast<Eigen::Index>(k.size());
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
        a(i, i + 1) += 1.0;
        a(i + 1, i) += static_cast<double>(k[static_cast<std::size_t>(i)]);
    }
    a(0, m - 1) += static_cast<double>(k[k.size() - 1]) * std::polar(1.0, phi);
    a(m - 1, 0) += std::polar(1.0, -phi);
    return {k, phi, std::move(a)};
}

Complex symbol_char_value(const SignVector& k, double phi, Complex lambda) {
    Eigen::MatrixXcd a = symbol_matrix(k, phi).matrix;
    a.diagonal().array() -= lambda;
    return a.partialPivLu().determinant();
}

SymbolPolynomial symbol_poly(const SignVector& k) {
    const std::size_t m = k.size();
    const int prod = k.product();
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const std::size_t nodes = m + 1;
    // Unit-circle nodes: larger radii amplify rounding by radius^m in the low coefficients.
    constexpr double radius = 1.0;

    std::vector<Complex> values(nodes);
    for (std::size_t s = 0; s < nodes; ++s) {
        const Complex node = std::polar(
            radius, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(nodes));
        values[s] = sign * symbol_char_value(k, 0.0, node) + static_cast<double>(prod + 1);
    }

    // Inverse DFT over the node circle: c_i r^i = (1/N) sum_s q_s w^{-is}.
    std::vector<BigInt> exact(nodes);
    std::vector<Complex> snapped(nodes);
    double snap_error = 0.0;
    double r_pow = 1.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        Complex acc{};
        for (std::size_t s = 0; s < nodes; ++s)
            acc += values[s] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                   static_cast<double>((i * s) % nodes) /
                                                   static_cast<double>(nodes));
        const Complex c = acc / (static_cast<double>(nodes) * r_pow);
        const double rounded = std::round(c.real());
        snap_error = std::max(snap_error, std::abs(c - Complex(rounded)));
        exact[i] = BigInt(static_cast<long long>(rounded));
        snapped[i] = Complex(rounded);
        r_pow *= radius;
    }
    if (snap_error > kSnapTolerance)
        throw NumericalConsistencyError("symbol_poly: interpolated coefficients of p for k=" +
                                        k.to_string() + " are " + std::to_string(snap_error) +
                                        " away from integers");
    if (exact[m] != 1)
        throw NumericalConsistencyError("symbol_poly: p is not monic of degree m for k=" +
                                        k.to_string());
    return {ComplexPolynomial(std::move(snapped)), IntPolynomial(std::move(exact)), prod, k,
            snap_error};
}

Complex symbol_char_from_poly(const SymbolPolynomial& sp, double phi, Complex lambda) {
    const double sign = (sp.k.size() % 2 == 0) ? 1.0 : -1.0;
    const Complex p = evaluate(sp.p, lambda).value;
    return sign * (p - static_cast<double>(sp.k_product) * std::polar(1.0, phi) - std::polar(1.0, -phi));
}

std::vector<Complex> symbol_eigenvalues(const SymbolPolynomial& sp, double phi, RootOptions opts) {
    const Complex shift =
        static_cast<double>(sp.k_product) * std::polar(1.0, phi) + std::polar(1.0, -phi);
    return roots(sp.p - shift, opts);
}

std::vector<Complex> symbol_eigenvalues(const SignVector& k, double phi, RootOptions opts) {
    return symbol_eigenvalues(symbol_poly(k), phi, opts);
}

SpectrumCloud periodic_spectrum(const SignVector& k, std::size_t samples, RootOptions opts) {
    if (samples < 2) throw ArgumentError("periodic_spectrum: samples must be >= 2");
    const SignVector even = ensure_even_parity(k);
    const SymbolPolynomial sp = symbol_poly(even);
    std::vector<Complex> targets(samples);
    std::vector<std::string> tags(samples);
    char buf[64];
    for (std::size_t s = 0; s < samples; ++s) {
        const double phi = std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples - 1);
        targets[s] = 2.0 * std::cos(phi);
        std::snprintf(buf, sizeof(buf), "per:m=%zu:phi=%.9g", even.size(), phi);
        tags[s] = buf;
    }
    return preimage(sp.p, targets, opts, tags);
}

}  // namespace tridsign
