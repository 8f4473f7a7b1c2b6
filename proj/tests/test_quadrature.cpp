#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "diskop/errors.hpp"
#include "diskop/quadrature.hpp"
#include "oracles.hpp"

using namespace diskop;
using oracle::ipow;

TEST_CASE("Gauss-Legendre nodes on (0, 1)") {
    const auto& rule = gauss_legendre_unit(20);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    // exact for polynomials of degree <= 39
    for (int k = 0; k < 40; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
        CHECK(s == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-13));
    }
    CHECK(&gauss_legendre_unit(20) == &rule);
    CHECK_THROWS_AS(gauss_legendre_unit(0), ConfigurationError);
}

TEST_CASE("monomials integrate exactly for a, b <= 10") {
    const DiskRule rule{32, 64};
    for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
            const auto v = integrate_disk([a, b](Complex w) { return ipow(w, a) * ipow(std::conj(w), b); }, rule);
            CHECK(std::abs(v.value - oracle::monomial_integral(a, b)) < 1e-12);
        }
    }
}

TEST_CASE("error estimate covers the true error of smooth integrands") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.2, 2.0);
    for (int k = 0; k < 10; ++k) {
        const double c = u(rng);
        // int exp(-c |w|^2) dA = (1 - exp(-c)) / c
        const auto v = integrate_disk([c](Complex w) { return Complex(std::exp(-c * std::norm(w)), 0.0); }, {16, 32});
        const double exact = (1.0 - std::exp(-c)) / c;
        CHECK(std::abs(v.value.real() - exact) <= v.abs_error_estimate + 1e-15);
    }
}

TEST_CASE("rule validation") {
    const FieldFn one = [](Complex) { return Complex(1.0, 0.0); };
    CHECK_THROWS_AS(integrate_disk(one, {4, 64}), ConfigurationError);
    CHECK_THROWS_AS(integrate_disk(one, {32, 8}), ConfigurationError);
    CHECK_THROWS_AS(integrate_disk_singular(one, DiskPoint(0.1, 0.0), 1.0, DiskRule::annulus(0.7)), ConfigurationError);
    CHECK_THROWS_AS(integrate_disk_singular(one, DiskPoint(0.1, 0.0), 1.0, DiskRule{}), ConfigurationError);
    CHECK_THROWS_AS(integrate_disk_singular(one, DiskPoint(0.1, 0.0), 1.0, DiskRule::mobius({0.5, 0.0})),
                    ConfigurationError);
}

TEST_CASE("non-integrable and invalid exponents") {
    const FieldFn f = [](Complex w) { return 1.0 / std::norm(w); };
    CHECK_THROWS_AS(integrate_disk_singular(f, DiskPoint(0.0, 0.0), 2.0, DiskRule::mobius(0.0, 1.0)), NonIntegrableError);
    CHECK_THROWS_AS(integrate_disk_singular(f, DiskPoint(0.0, 0.0), -1.0, DiskRule::mobius(0.0, 1.0)), DomainError);
}

TEST_CASE("non-finite integrand reports the node") {
    const FieldFn bad = [](Complex w) { return w.real() > 0.5 ? Complex(NAN, 0.0) : Complex(1.0, 0.0); };
    CHECK_THROWS_AS(integrate_disk(bad, {16, 32}), EvaluationError);
}

TEST_CASE("singular masses |w - b|^-s by both strategies") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> sr(0.3, 1.8);
    for (int k = 0; k < 6; ++k) {
        const double s = sr(rng);
        const double rho = 0.15 * k;
        const FieldFn f = [rho, s](Complex w) { return Complex(std::pow(std::abs(w - rho), -s), 0.0); };
        const double exact = oracle::singular_mass(s, rho);
        const auto m = integrate_disk_singular(f, DiskPoint(rho, 0.0), s, DiskRule::mobius(rho, s, 128, 256));
        const auto a = integrate_disk_singular(f, DiskPoint(rho, 0.0), s, DiskRule::annulus(0.05, s, 128, 256));
        CHECK(std::abs(m.value.real() - exact) <= m.abs_error_estimate + 1e-8 * exact);
        CHECK(std::abs(a.value.real() - exact) <= a.abs_error_estimate + 1e-8 * exact);
    }
}

TEST_CASE("Mobius and annulus agree on seeded oscillating singular integrands") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> sr(0.2, 1.6);
    for (int k = 0; k < 10; ++k) {
        const Complex b = oracle::random_point(rng, 0.8);
        const double s = sr(rng);
        const FieldFn f = [b, s](Complex w) { return std::exp(w) * std::pow(std::abs(w - b), -s); };
        const auto m = integrate_disk_singular(f, DiskPoint(b), s, DiskRule::mobius(b, s, 128, 256));
        const auto a = integrate_disk_singular(f, DiskPoint(b), s, DiskRule::annulus(0.05, s, 128, 256));
        CHECK(std::abs(m.value - a.value) <= m.abs_error_estimate + a.abs_error_estimate);
    }
}

TEST_CASE("exponents near 2 stay finite under the Mobius map") {
    const FieldFn f = [](Complex w) { return Complex(std::pow(std::abs(w - 0.3), -1.9), 0.0); };
    const auto m = integrate_disk_singular(f, DiskPoint(0.3, 0.0), 1.9, DiskRule::mobius(0.3, 1.9));
    CHECK(std::isfinite(m.value.real()));
    CHECK(std::abs(m.value.real() - oracle::singular_mass(1.9, 0.3)) <= m.abs_error_estimate + 1e-6);
}

TEST_CASE("outside-disk integrals about an interior and a boundary point") {
    const FieldFn one = [](Complex) { return Complex(1.0, 0.0); };
    // area of the disk minus a hole of radius eps, normalized
    const auto inner = integrate_outside_disk_around(one, DiskPoint(0.2, 0.1), 0.1, 64, 128);
    CHECK(inner.value.real() == doctest::Approx(1.0 - 0.01).epsilon(1e-12));
    // |w - 1| > eps inside the disk, in polar coordinates about 1
    const double eps = 0.1;
    const auto edge = integrate_outside_disk_around(one, DiskPoint(1.0, 0.0), eps, 64, 128);
    const double phi0 = std::acos(eps / 2.0);
    // (1/pi) int_{|psi| < phi0} (2 cos^2 psi - eps^2 / 2) dpsi
    const double lens = (2.0 * phi0 + std::sin(2.0 * phi0) - eps * eps * phi0) / oracle::kPi;
    // the exit radius meets the hole with a square-root kink, so convergence is algebraic
    CHECK(std::abs(edge.value.real() - lens) <= edge.abs_error_estimate);
    CHECK(edge.abs_error_estimate < 1e-5);
}

TEST_CASE("truncated singular integrals grow as eps shrinks") {
    const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    const FieldFn f = [](Complex w) { return 1.0 / std::norm(w - 0.1); };
    const auto v = truncated_singular_integral(f, DiskPoint(0.1, 0.0), eps, 64, 128);
    REQUIRE(v.size() == 3);
    // int_{eps < |w - b|} |w - b|^-2 dA increases by 2 log 10 per decade
    CHECK(v[1] - v[0] == doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-8));
    CHECK(v[2] - v[1] == doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-8));
    const std::vector<double> bad{1e-3, 1e-2};
    CHECK_THROWS_AS(truncated_singular_integral(f, DiskPoint(0.1, 0.0), bad), DomainError);
}

TEST_CASE("required angular nodes and rule helpers") {
    CHECK(required_angular_nodes({0.5, 0.0}) == 0);
    CHECK(required_angular_nodes({0.99, 0.0}) >= 6400);
    const DiskRule r{32, 64};
    CHECK(r.resolved_for({0.99, 0.0}).angular_nodes >= 6400);
    CHECK(std::pow(0.5, r.resolved_for({0.5, 0.0}).angular_nodes) < 1e-15);
    const auto m = DiskRule::mobius({0.1, 0.0}).recentered({0.3, 0.0});
    CHECK(std::get<Mobius>(m.singularity).center.value() == Complex(0.3, 0.0));
    CHECK(std::get<AnnulusExclude>(DiskRule::annulus(0.05).with_exponent(1.5).singularity).exponent == 1.5);
}
