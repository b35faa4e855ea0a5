#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tridsign/error.hpp"
#include "tridsign/int_polynomial.hpp"
#include "tridsign/polynomial.hpp"

using namespace tridsign;
using C = std::complex<double>;

namespace {

// prod (lambda - r_i), expanded by hand.
std::vector<C> expand(const std::vector<C>& roots) {
    std::vector<C> c{1.0};
    for (const C& r : roots) {
        std::vector<C> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

// Companion-matrix eigenvalues of a monic polynomial.
std::vector<C> companion_roots(const ComplexPolynomial& p) {
    const auto q = p.monic().coeffs();
    const auto d = static_cast<Eigen::Index>(q.size() - 1);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) a(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) a(i, d - 1) = -q[std::size_t(i)];
    return oracle::eigenvalues(a);
}

ComplexPolynomial random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<C> c(degree + 1);
    for (auto& x : c) x = {u(rng), u(rng)};
    while (std::abs(c.back()) < 1e-3) c.back() = {u(rng), u(rng)};
    return ComplexPolynomial(c);
}

}  // namespace

TEST_CASE("evaluate returns value and magnitude scale") {
    auto e = evaluate(ComplexPolynomial{-2.0, 0.0, 1.0}, 0.0);
    CHECK(e.value == C(-2.0));
    CHECK(e.scale == 2.0);
    e = evaluate(ComplexPolynomial{0.0, 1.0}, C(3, 4));
    CHECK(e.value == C(3, 4));
    CHECK(e.scale == doctest::Approx(5.0));
    e = evaluate(ComplexPolynomial{1.0, 0.0, 1.0}, C(0, 1));
    CHECK(std::abs(e.value) == 0.0);
    CHECK(e.scale == 2.0);
}

TEST_CASE("construction trims trailing zeros") {
    ComplexPolynomial p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(ComplexPolynomial{0.0, 0.0}.is_zero());
    CHECK(ComplexPolynomial{}.degree() == 0);
}

TEST_CASE("roots of small known polynomials") {
    SUBCASE("lambda^2 + 1") {
        CHECK(multiset_match(roots(ComplexPolynomial{1.0, 0.0, 1.0}), {C(0, 1), C(0, -1)}, 1e-12));
    }
    SUBCASE("expanded (l-1)(l-2)(l-3)") {
        const auto c = expand({1.0, 2.0, 3.0});
        CHECK(c == std::vector<C>{-6.0, 11.0, -6.0, 1.0});
        CHECK(multiset_match(roots(ComplexPolynomial(c)), {1.0, 2.0, 3.0}, 1e-8));
    }
    SUBCASE("negated continuant for k = (+1, +1)") {
        // D_3 = -l D_2 - D_1 with D_2 = l^2 - 1, D_1 = -l: -l^3 + 2l.
        CHECK(multiset_match(roots(ComplexPolynomial{0.0, -2.0, 0.0, 1.0}), {0.0, std::sqrt(2.0), -std::sqrt(2.0)}, 1e-12));
    }
    SUBCASE("quadratic formula oracle") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int t = 0; t < 200; ++t) {
            const C a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
            const C disc = std::sqrt(b * b - 4.0 * a * c);
            const std::vector<C> expected{(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
            CHECK(multiset_match(roots(ComplexPolynomial{c, b, a}), expected, 1e-8));
        }
    }
    SUBCASE("multiple roots come back as clusters") {
        const auto r = roots(ComplexPolynomial(expand({1.0, 1.0, 1.0, C(0, 2)})));
        CHECK(r.size() == 4);
        CHECK(multiset_match(r, {1.0, 1.0, 1.0, C(0, 2)}, 1e-4));
        const auto z = roots(ComplexPolynomial{0.0, 0.0, 1.0});
        CHECK(z == std::vector<C>{0.0, 0.0});
    }
}

TEST_CASE("roots rejects bad input") {
    CHECK_THROWS_AS(roots(ComplexPolynomial{3.0}), ArgumentError);
    CHECK_THROWS_AS(roots(ComplexPolynomial{1.0, 1.0}, {0.0, 200}), ArgumentError);
    std::mt19937_64 rng(1);
    try {
        roots(random_poly(rng, 40), {1e-10, 1});
        FAIL("expected non-convergence");
    } catch (const ConvergenceError& e) {
        CHECK(e.worst_residual() > 1e-10);
    }
}

TEST_CASE("random polynomials: residual, companion oracle, reconstruction") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> deg(1, 64);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = deg(rng);
        const ComplexPolynomial p = random_poly(rng, d);
        const auto r = roots(p);
        REQUIRE(r.size() == d);
        for (const C& z : r) CHECK(normalized_residual(evaluate(p, z)) <= 1e-10);
        if (d <= 32) {
            const auto c = expand(r);
            const auto q = p.monic().coeffs();
            double err = 0.0;
            for (std::size_t i = 0; i <= d; ++i) err = std::max(err, std::abs(c[i] - q[i]));
            CHECK(err <= 1e-6);
            CHECK(multiset_match(r, companion_roots(p), 1e-6));
        }
    }
}

TEST_CASE("real coefficients give conjugate-closed roots") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<C> c(2 + t % 30);
        for (auto& x : c) x = u(rng);
        const auto r = roots(ComplexPolynomial(c));
        std::vector<C> conj;
        for (const C& z : r) conj.push_back(std::conj(z));
        CHECK(multiset_match(r, conj, 1e-8));
    }
}

TEST_CASE("preimage unions roots of p - t") {
    auto cloud = preimage(ComplexPolynomial{0.0, 1.0}, {-2.0, 0.0, 2.0});
    CHECK(multiset_match(cloud.points(), {-2.0, 0.0, 2.0}, 1e-12));
    CHECK(cloud.tag(0) == "t=0");
    CHECK(cloud.tag(2) == "t=2");

    cloud = preimage(ComplexPolynomial{0.0, 0.0, 1.0}, {-2.0});
    CHECK(multiset_match(cloud.points(), {C(0, std::sqrt(2.0)), C(0, -std::sqrt(2.0))}, 1e-12));

    cloud = preimage(ComplexPolynomial{-2.0, 0.0, 1.0}, {2.0}, {}, {"edge"});
    CHECK(multiset_match(cloud.points(), {2.0, -2.0}, 1e-12));
    CHECK(cloud.tag(1) == "edge");

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const ComplexPolynomial p = random_poly(rng, 1 + t % 12);
        CHECK(preimage(p, {C(0.3, -0.1)}).size() == p.degree());
    }
    CHECK_THROWS_AS(preimage(ComplexPolynomial{1.0}, {0.0}), ArgumentError);
    CHECK_THROWS_AS(preimage(ComplexPolynomial{0.0, 1.0}, {0.0, 1.0}, {}, {"a"}), DimensionError);
}

TEST_CASE("int_charpoly_oracle") {
    CHECK(int_charpoly_oracle({{0, 1}, {1, 0}}) == IntPolynomial{-1, 0, 1});
    CHECK(int_charpoly_oracle({{0, 1}, {-1, 0}}) == IntPolynomial{1, 0, 1});
    CHECK(int_charpoly_oracle({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}) == IntPolynomial{0, -2, 0, 1});
    CHECK_THROWS_AS(int_charpoly_oracle(IntMatrix(33, std::vector<std::int64_t>(33))), RefusalError);
    CHECK_THROWS_AS(int_charpoly_oracle({{0, 1}}), DimensionError);

    // Against a hand-expanded Laplace determinant of lambda I - A at random points.
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 4;
        IntMatrix a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        Eigen::MatrixXcd dense(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dense(i, j) = double(a[std::size_t(i)][std::size_t(j)] = e(rng));
        const IntPolynomial chi = int_charpoly_oracle(a);
        CHECK(chi.degree() == std::size_t(n));
        const C z(0.7, -1.3);
        const C lap = oracle::laplace_det(z * Eigen::MatrixXcd::Identity(n, n) - dense);
        CHECK(std::abs(chi.evaluate(z).value - lap) <= 1e-9 * (1.0 + std::abs(lap)));
    }
}

TEST_CASE("IntPolynomial arithmetic is exact") {
    const IntPolynomial a{1, 1};
    IntPolynomial p = IntPolynomial::monomial(0);
    for (int i = 0; i < 80; ++i) p = p * a;
    CHECK(p.coeffs()[40] == BigInt("107507208733336176461620"));
    CHECK((p - p).is_zero());
    const auto [q, r] = divmod_monic(p, a);
    CHECK(r.is_zero());
    CHECK(q * a == p);
    CHECK(IntPolynomial{0, 0, 1}.compose(IntPolynomial{1, 1}) == IntPolynomial{1, 2, 1});
    CHECK(IntPolynomial{5, 0, 3}.derivative() == IntPolynomial{0, 6});
}
