#include "tridsign/embed.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "tridsign/error.hpp"
#include "tridsign/finite.hpp"
#include "tridsign/symbol.hpp"

namespace tridsign {

using Complex = std::complex<double>;

namespace {

double root_angle(std::size_t j, std::size_t n) {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
}

std::string target_tag(std::size_t j) { return "target:j=" + std::to_string(j); }

}  // namespace

BlockCirculant build_block_circulant(const SignVector& k_in, std::size_t n, ParityPolicy parity) {
    if (n < 2) throw ArgumentError("build_block_circulant: n must be >= 2");
    SignVector k = parity == ParityPolicy::ensure_even ? ensure_even_parity(k_in) : k_in;
    const std::size_t m = k.size();
    const auto size = static_cast<Eigen::Index>(m * n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index i = 0; i + 1 < size; ++i) {
        a(i, i + 1) += 1.0;
        a(i + 1, i) += static_cast<double>(k[static_cast<std::size_t>(i) % m]);
    }
    a(0, size - 1) += static_cast<double>(k[m - 1]);
    a(size - 1, 0) += 1.0;
    return {std::move(k), n, std::move(a)};
}

FactorizationReport circulant_factorization_check(const BlockCirculant& mat, double tol) {
    const std::size_t size = mat.size();
    if (size > kFactorizationMaxSize)
        throw RefusalError("circulant_factorization_check: nm = " + std::to_string(size) +
                           " exceeds " + std::to_string(kFactorizationMaxSize));
    FactorizationReport report;
    report.samples = 4 * size;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ size);
    std::uniform_real_distribution<double> radius(0.25, 2.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const Eigen::MatrixXcd dense = mat.matrix.cast<Complex>();

    Complex worst_lambda{};
    for (std::size_t s = 0; s < report.samples; ++s) {
        const double r = radius(rng);
        const Complex lambda = std::polar(r, angle(rng));
        Eigen::MatrixXcd shifted = dense;
        shifted.diagonal().array() -= lambda;
        const Complex lhs = shifted.partialPivLu().determinant();
        Complex rhs{1.0};
        for (std::size_t j = 1; j <= mat.n; ++j)
            rhs *= symbol_char_value(mat.k, root_angle(j, mat.n), lambda);
        const double denom = std::max(std::abs(lhs), std::abs(rhs));
        const double err = denom > 0.0 ? std::abs(lhs - rhs) / denom : 0.0;
        if (!(err <= report.worst_relative_error)) {
            report.worst_relative_error = err;
            worst_lambda = lambda;
        }
    }
    report.passed = report.worst_relative_error <= tol;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "k=%s n=%zu nm=%zu: worst relative error %.3e at lambda=(%.6f,%.6f) over %zu samples (tol %.1e)",
                  mat.k.to_string().c_str(), mat.n, size, report.worst_relative_error,
                  worst_lambda.real(), worst_lambda.imag(), report.samples, tol);
    report.diagnostic = buf;
    return report;
}

FactorizationReport circulant_factorization_check(const SignVector& k, std::size_t n, double tol) {
    return circulant_factorization_check(build_block_circulant(k, n), tol);
}

std::vector<std::size_t> target_indices(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j < n; ++j)
        if (!(n % 2 == 0 && 2 * j == n)) out.push_back(j);
    return out;
}

SpectrumCloud target_set(const SignVector& k, std::size_t n, RootOptions opts) {
    if (n < 2) throw ArgumentError("target_set: n must be >= 2");
    if (k.minus_count() % 2 != 0)
        throw ArgumentError("target_set: k must have an even number of -1 entries");
    SpectrumCloud cloud;
    const auto indices = target_indices(n);
    if (indices.empty()) {
        cloud.warn("target_set: no admissible roots of unity for n = " + std::to_string(n));
        return cloud;
    }
    const SymbolPolynomial sp = symbol_poly(k);
    for (auto j : indices) {
        const auto id = cloud.intern(target_tag(j));
        for (const auto& z : symbol_eigenvalues(sp, root_angle(j, n), opts)) cloud.add(z, id);
    }
    return cloud;
}

SignVector truncate(const SignVector& k, std::size_t n) {
    const std::size_t m = k.size();
    if (n * m < 3) throw ArgumentError("truncate: nm must be >= 3");
    // M's sub-diagonal entry i (0-based) is k[i mod m]; dropping row/column 1
    // keeps entries 1 .. nm-2.
    SignVector l(n * m - 2);
    for (std::size_t i = 0; i < l.size(); ++i) l.set(i, k[(i + 1) % m]);
    return l;
}

namespace {

Eigen::VectorXcd start_vector(Eigen::Index size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = Complex(g(rng), g(rng));
    return v.normalized();
}

Eigen::VectorXcd inverse_iteration(const Eigen::MatrixXcd& m, Complex shift, Eigen::VectorXcd v) {
    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() -= shift;
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    for (int it = 0; it < 3; ++it) v = lu.solve(v).normalized();
    return v;
}

Witness make_witness(const Eigen::MatrixXcd& m, std::size_t j, Complex lambda) {
    constexpr double eps = 1e-9;
    const double delta = eps * (1.0 + std::abs(lambda));
    const Eigen::Index size = m.rows();
    const Eigen::VectorXcd v =
        inverse_iteration(m, lambda * (1.0 + eps) + delta, start_vector(size, 0xA11CE + j));
    const Eigen::VectorXcd w =
        inverse_iteration(m, lambda * (1.0 - eps) - delta, start_vector(size, 0xB0B + 7 * j));

    const Eigen::VectorXcd w_perp = w - v * v.dot(w);
    if (w_perp.norm() < 1e-6)
        throw WitnessDegenerateError("eigenspace for target j=" + std::to_string(j) +
                                         " is numerically one-dimensional",
                                     static_cast<int>(j));

    Eigen::VectorXcd x = w(0) * v - v(0) * w;
    if (x.norm() < 1e-12) x = std::abs(v(0)) <= std::abs(w(0)) ? v : w;
    x(0) = 0.0;
    x.normalize();

    Witness out{j, lambda, x, 0.0, 0.0};
    out.first_ratio = std::abs(x(0));
    out.residual = (m * x - lambda * x).norm();
    return out;
}

}  // namespace

EmbeddingResult verify_embedding(const SignVector& k, std::size_t n, const EmbedOptions& opts) {
    if (n < 2) throw ArgumentError("verify_embedding: n must be >= 2");
    EmbeddingResult result;
    result.k_input = k;
    result.k_effective = ensure_even_parity(k);
    result.parity_doubled = result.k_effective.size() != k.size();
    result.n = n;
    result.m = result.k_effective.size();
    result.tol = opts.tol;
    if (n * result.m < 3) throw ArgumentError("verify_embedding: nm must be >= 3");
    result.l = truncate(result.k_effective, n);
    result.targets = target_set(result.k_effective, n, opts.roots);

    for (std::size_t i = 0; i < result.targets.size(); ++i) {
        const Complex z = result.targets.point(i);
        const std::size_t j = std::stoul(result.targets.tag(i).substr(9));
        const double r = normalized_residual(charpoly_eval_at(result.l, z, 1.0));
        result.checks.push_back({j, z, r});
        result.worst_residual = std::max(result.worst_residual, r);
    }

    const SymbolPolynomial sp = symbol_poly(result.k_effective);
    std::vector<std::size_t> excluded{n};
    if (n % 2 == 0) excluded.insert(excluded.begin(), n / 2);
    for (auto j : excluded)
        for (const auto& z : symbol_eigenvalues(sp, root_angle(j, n), opts.roots))
            result.excluded.push_back({j, z, normalized_residual(charpoly_eval_at(result.l, z, 1.0))});

    result.verified = result.worst_residual <= opts.tol;

    if (opts.want_witness && !result.checks.empty()) {
        const Eigen::MatrixXcd dense =
            build_block_circulant(result.k_effective, n, ParityPolicy::as_given).matrix.cast<Complex>();
        for (const auto& c : result.checks) result.witnesses.push_back(make_witness(dense, c.j, c.lambda));
    }
    return result;
}

}  // namespace tridsign
