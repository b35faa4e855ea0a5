#include "tridsign/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tridsign/error.hpp"

namespace tridsign {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex{1.0}};
    for (const auto& r : roots) {
        c.push_back(Complex{});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::monic() const {
    if (is_zero()) throw ArgumentError("zero polynomial has no monic form");
    std::vector<Complex> c(coeffs_);
    const Complex lead = c.back();
    for (auto& x : c) x /= lead;
    c.back() = 1.0;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() == 1) return ComplexPolynomial();
    std::vector<Complex> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<double>(i);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator-(Complex t) const {
    std::vector<Complex> c(coeffs_);
    c[0] -= t;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(c));
}

Evaluation evaluate(const ComplexPolynomial& p, Complex z) {
    const auto& c = p.coeffs();
    const double az = std::abs(z);
    Complex v = c.back();
    double s = std::abs(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        v = v * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {v, s};
}

namespace {

// Value, derivative and scale in one Horner pass.
struct Horner {
    Complex value;
    Complex slope;
    double scale;
};

Horner horner(const std::vector<Complex>& c, Complex z) {
    const double az = std::abs(z);
    Complex v = c.back();
    Complex d{};
    double s = std::abs(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        d = d * z + v;
        v = v * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {v, d, s};
}

bool small_enough(const Horner& h, double tol) { return std::abs(h.value) <= tol * h.scale; }

}  // namespace

std::vector<Complex> roots(const ComplexPolynomial& p, RootOptions opts) {
    const std::size_t deg = p.degree();
    if (deg == 0) throw ArgumentError("roots: polynomial must have degree >= 1");
    if (!(opts.tol > 0.0)) throw ArgumentError("roots: tol must be positive");

    // Exactly vanishing low coefficients are exact roots at zero. The residual
    // bound cannot be met near zero otherwise (p = lambda^2 has ratio 1 everywhere).
    std::size_t zeros = 0;
    while (p.coeffs()[zeros] == Complex{}) ++zeros;
    std::vector<Complex> out(zeros, Complex{});
    if (zeros == deg) return out;

    const ComplexPolynomial q =
        ComplexPolynomial(std::vector<Complex>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                                               p.coeffs().end()))
            .monic();
    const auto& c = q.coeffs();
    const std::size_t d = q.degree();
    if (d == 1) {
        out.push_back(-c[0]);
        return out;
    }

    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1.0;

    // Irrational offset so no start point lands on a symmetry axis of p.
    constexpr double offset = 0.5772156649015329;
    std::vector<Complex> z(d);
    for (std::size_t j = 0; j < d; ++j)
        z[j] = std::polar(radius,
                          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d) + offset);

    // After the residual bound holds a root keeps being polished while its
    // residual strictly drops, so clusters get as tight as rounding allows.
    constexpr int max_polish = 12;
    std::vector<int> polish(d, -1);
    std::vector<bool> done(d, false);
    std::size_t remaining = d;
    for (int iter = 0; iter < opts.max_iter && remaining > 0; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            const Horner h = horner(c, z[i]);
            if (polish[i] < 0 && small_enough(h, opts.tol)) polish[i] = 0;
            Complex sum{};
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex step;
            if (h.slope == Complex{}) {
                step = Complex{radius * 1e-8, radius * 1e-8};
            } else {
                const Complex ratio = h.value / h.slope;
                step = ratio / (1.0 - ratio * sum);
            }
            const Complex candidate = z[i] - step;
            const bool finite = std::isfinite(candidate.real()) && std::isfinite(candidate.imag());
            if (polish[i] < 0) {
                if (finite) z[i] = candidate;
                continue;
            }
            const Horner hc = horner(c, candidate);
            if (finite && std::abs(hc.value) < std::abs(h.value) && small_enough(hc, opts.tol)) {
                z[i] = candidate;
                if (++polish[i] < max_polish && hc.value != Complex{}) continue;
            }
            done[i] = true;
            --remaining;
        }
    }
    if (remaining > 0) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (polish[i] >= 0) continue;
            const Horner h = horner(c, z[i]);
            worst = std::max(worst, std::abs(h.value) / h.scale);
        }
        if (worst > 0.0)
            throw ConvergenceError("Aberth iteration did not converge in " + std::to_string(opts.max_iter) +
                                       " iterations (degree " + std::to_string(d) +
                                       ", worst normalized residual " + std::to_string(worst) + ")",
                                   worst);
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

SpectrumCloud preimage(const ComplexPolynomial& p, const std::vector<Complex>& targets,
                       RootOptions opts, const std::vector<std::string>& tags) {
    if (p.degree() == 0) throw ArgumentError("preimage: polynomial must have degree >= 1");
    if (!tags.empty() && tags.size() != targets.size())
        throw DimensionError("preimage: one tag per target required");
    SpectrumCloud cloud;
    cloud.reserve(targets.size() * p.degree());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto id = cloud.intern(tags.empty() ? "t=" + std::to_string(t) : tags[t]);
        for (const auto& r : roots(p - targets[t], opts)) cloud.add(r, id);
    }
    return cloud;
}

}  // namespace tridsign
