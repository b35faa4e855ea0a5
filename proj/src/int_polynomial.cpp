#include "tridsign/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "tridsign/error.hpp"

namespace tridsign {

namespace {

void trim(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.emplace_back(0);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim(coeffs_);
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coeff) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() == 1) return {};
    std::vector<BigInt> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * i;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial out(std::vector<BigInt>{coeffs_.back()});
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
        out = out * inner + IntPolynomial(std::vector<BigInt>{coeffs_[i]});
    return out;
}

ComplexPolynomial IntPolynomial::to_complex() const {
    std::vector<Complex> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = Complex(coeffs_[i].convert_to<double>());
    return ComplexPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0 && !(i == 0 && first)) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
    std::vector<BigInt> c(a.coeffs_);
    for (auto& x : c) x *= s;
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.leading() != 1) throw ArgumentError("divmod_monic: divisor must be monic");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    std::vector<BigInt> rem(a.coeffs());
    const std::size_t db = b.degree();
    std::vector<BigInt> quo(a.degree() - db + 1, BigInt(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        const BigInt q = rem[i + db];
        quo[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs()[j];
    }
    rem.resize(db == 0 ? 1 : db);
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

IntPolynomial int_charpoly_oracle(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw DimensionError("int_charpoly_oracle: empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw DimensionError("int_charpoly_oracle: matrix is not square");
    if (n > kOracleMaxSize)
        throw RefusalError("int_charpoly_oracle: size " + std::to_string(n) +
                           " exceeds the exact oracle bound " + std::to_string(kOracleMaxSize));

    // Berkowitz: v holds the coefficients of det(lambda I - A_r), highest first.
    std::vector<BigInt> v{BigInt(1)};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<BigInt> col(r + 2, BigInt(0));
        col[0] = 1;
        col[1] = -BigInt(a[r][r]);
        // col[k + 2] = -R * A_r^k * S with R = row r, S = column r of the leading block.
        std::vector<BigInt> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = a[i][r];
        for (std::size_t k = 0; k + 2 < r + 2; ++k) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += BigInt(a[r][i]) * s[i];
            col[k + 2] = -dot;
            std::vector<BigInt> next(r, BigInt(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (a[i][j] != 0) next[i] += BigInt(a[i][j]) * s[j];
            s = std::move(next);
        }
        std::vector<BigInt> w(r + 2, BigInt(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += col[i - j] * v[j];
        v = std::move(w);
    }
    std::reverse(v.begin(), v.end());
    return IntPolynomial(std::move(v));
}

}  // namespace tridsign
