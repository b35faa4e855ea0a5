#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tridsign/polynomial.hpp"

namespace tridsign {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial over the integers; coeffs()[i] multiplies lambda^i.
class IntPolynomial {
   public:
    IntPolynomial() : coeffs_{BigInt(0)} {}
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial monomial(std::size_t degree, BigInt coeff = 1);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    IntPolynomial derivative() const;
    /// (*this)(inner(lambda))
    IntPolynomial compose(const IntPolynomial& inner) const;
    ComplexPolynomial to_complex() const;
    Evaluation evaluate(std::complex<double> z) const { return tridsign::evaluate(to_complex(), z); }

    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a);
    friend IntPolynomial operator-(const IntPolynomial& a) { return BigInt(-1) * a; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

   private:
    std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of a / b for a monic divisor b.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Largest matrix the exact oracle accepts.
inline constexpr std::size_t kOracleMaxSize = 32;

/// Exact det(lambda I - A) by Berkowitz's division-free algorithm.
/// Throws RefusalError above kOracleMaxSize.
IntPolynomial int_charpoly_oracle(const IntMatrix& a);

}  // namespace tridsign
