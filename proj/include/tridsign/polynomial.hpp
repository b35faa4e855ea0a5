#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "tridsign/spectrum_cloud.hpp"

namespace tridsign {

using Complex = std::complex<double>;

/// Dense univariate polynomial over the complex numbers; coeffs()[i] is the
/// coefficient of lambda^i. Trailing zeros are trimmed, the zero polynomial
/// keeps a single zero coefficient.
class ComplexPolynomial {
   public:
    ComplexPolynomial() : coeffs_{Complex{}} {}
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs)
        : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

    /// prod_i (lambda - r_i)
    static ComplexPolynomial from_roots(const std::vector<Complex>& roots);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

    ComplexPolynomial monic() const;
    ComplexPolynomial derivative() const;
    ComplexPolynomial operator-(Complex t) const;

    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

   private:
    std::vector<Complex> coeffs_;
};

struct Evaluation {
    Complex value;
    /// sum_i |c_i| |z|^i, the magnitude scale residuals are measured against.
    double scale;
};

Evaluation evaluate(const ComplexPolynomial& p, Complex z);

inline double normalized_residual(const Evaluation& e) {
    return e.scale > 0.0 ? std::abs(e.value) / e.scale : std::abs(e.value);
}

struct RootOptions {
    double tol = 1e-10;
    int max_iter = 200;
};

/// All degree(p) roots, with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration. Each root r satisfies |p(r)| <= tol * scale(r). Clusters from
/// multiple roots are returned as-is (no deflation).
std::vector<Complex> roots(const ComplexPolynomial& p, RootOptions opts = {});

/// Union over targets t of roots(p - t). Point i of targets gets tags[i] if
/// given, otherwise "t=<i>".
SpectrumCloud preimage(const ComplexPolynomial& p, const std::vector<Complex>& targets,
                       RootOptions opts = {}, const std::vector<std::string>& tags = {});

}  // namespace tridsign
