#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "diskop/errors.hpp"
#include "diskop/specfun.hpp"
#include "oracles.hpp"

using namespace diskop;

TEST_CASE("ln_gamma against frozen values and the reflection sign") {
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(ln_gamma(30.5) == doctest::Approx(72.95347118416941).epsilon(1e-14));
    const auto neg = signed_ln_gamma(-0.5);
    CHECK(neg.sign == -1);
    CHECK(neg.log_abs == doctest::Approx(1.265512123484645).epsilon(1e-13));
    CHECK(signed_ln_gamma(-1.5).sign == 1);
    CHECK_THROWS_AS(signed_ln_gamma(-2.0), DomainError);
}

TEST_CASE("ln_gamma recurrence on seeded arguments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 40.0);
    for (int k = 0; k < 200; ++k) {
        const double x = u(rng);
        CHECK(ln_gamma(x + 1.0) - ln_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-11));
    }
}

TEST_CASE("pochhammer_log sums logs of the factors") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int k = 0; k < 50; ++k) {
        const double q = u(rng);
        const std::size_t n = static_cast<std::size_t>(k % 30);
        double ref = 0.0;
        for (std::size_t j = 0; j < n; ++j) ref += std::log(q + static_cast<double>(j));
        CHECK(pochhammer_log(q, n) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Gauss summation at unit argument") {
    CHECK(gauss_2f1_at_1(0.5, 0.5, 2.0) == doctest::Approx(4.0 / oracle::kPi).epsilon(1e-15));
    CHECK(gauss_2f1_at_1(0.3, 0.7, 1.9) == doctest::Approx(1.252770901874711).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_2f1_at_1(1.0, 1.0, 1.5), ConvergenceError);
}

TEST_CASE("hyp_pfq: geometric and algebraic regimes") {
    const auto log2 = hyp_pfq({{1.0, 1.0}, {2.0}, 0.5}, 1e-14);
    CHECK(log2.value == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    const auto f32 = hyp_pfq({{0.5, 1.0, 1.5}, {2.0, 2.5}, 0.7}, 1e-14);
    CHECK(f32.value == doctest::Approx(1.146937431694522).epsilon(1e-13));
    // unit argument, slow algebraic decay: compare with Gauss's closed form
    const auto slow = hyp_pfq({{0.5, 0.5}, {2.0}, 1.0}, 1e-11);
    CHECK(std::abs(slow.value - 4.0 / oracle::kPi) <= std::max(slow.tail_bound, 1e-10));
}

TEST_CASE("hyp_pfq rejects divergent and malformed series") {
    CHECK_THROWS_AS(hyp_pfq({{1.0, 1.0}, {1.5}, 1.0}, 1e-10), ConvergenceError);
    CHECK_THROWS_AS(hyp_pfq({{1.0, 1.0, 1.0}, {1.0}, 0.5}, 1e-10), ConvergenceError);
    CHECK_THROWS_AS(hyp_pfq({{1.0}, {-2.0}, 0.5}, 1e-10), DomainError);
    CHECK_THROWS_AS(hyp_pfq({{1.0}, {2.0}, 1.5}, 1e-10), DomainError);
}

TEST_CASE("hyp_pfq tail bound brackets a tighter evaluation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> par(0.1, 2.0);
    std::uniform_real_distribution<double> arg(0.0, 0.95);
    for (int k = 0; k < 40; ++k) {
        const HypergeometricSpec spec{{par(rng), par(rng)}, {par(rng) + 0.5}, arg(rng)};
        const auto loose = hyp_pfq(spec, 1e-6);
        const auto tight = hyp_pfq(spec, 1e-14);
        CHECK(std::abs(loose.value - tight.value) <= loose.tail_bound + 1e-13 * std::abs(tight.value));
    }
}

TEST_CASE("Bessel J0 and its first zero") {
    CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(bessel_j1(1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-14));
    const double j0 = bessel_j0_smallest_zero();
    CHECK(j0 == doctest::Approx(oracle::kJ0Zero).epsilon(1e-14));
    CHECK(std::abs(bessel_j0(j0)) < 1e-14);
    CHECK(2.0 / j0 == doctest::Approx(oracle::kTwoOverJ0).epsilon(1e-14));
}

TEST_CASE("Catalan constant: accelerated and plain partial sums") {
    const auto alpha = catalan_constant(1e-14);
    CHECK(std::abs(alpha.value - oracle::kCatalan) <= std::max(alpha.tail_bound, 1e-15));
    const auto partial = catalan_partial_sum(1000);
    CHECK(std::abs(partial.value - oracle::kCatalan) <= partial.tail_bound);
    CHECK_THROWS_AS(catalan_constant(0.0), DomainError);
}

TEST_CASE("Riemann zeta against Euler-Maclaurin") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(oracle::kZeta2).epsilon(1e-13));
    CHECK(riemann_zeta(3.0) == doctest::Approx(oracle::kZeta3).epsilon(1e-13));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(1.05, 6.0);
    for (int k = 0; k < 30; ++k) {
        const double s = u(rng);
        CHECK(riemann_zeta(s) == doctest::Approx(oracle::zeta(s)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
}

TEST_CASE("Gautschi interval contains Gamma(n + q/2) / n!") {
    for (double q : {1.0, 1.25, 1.5, 1.75}) {
        for (std::size_t n : {1u, 2u, 10u, 100u, 1000u}) {
            const auto [lo, hi] = gautschi_interval(q, n);
            const double v = std::exp(ln_gamma(static_cast<double>(n) + 0.5 * q) - ln_gamma(static_cast<double>(n) + 1.0));
            CHECK(lo <= v * (1.0 + 1e-12));
            CHECK(v <= hi * (1.0 + 1e-12));
        }
    }
}
