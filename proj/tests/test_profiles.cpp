#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "diskop/errors.hpp"
#include "diskop/profiles.hpp"
#include "oracles.hpp"

using namespace diskop;

namespace {
double q_of(double p) { return p / (p - 1.0); }
}  // namespace

TEST_CASE("conjugate exponents") {
    const auto e = ConjugateExponents::from_p(4.0);
    CHECK(e.q() == doctest::Approx(4.0 / 3.0));
    CHECK(ConjugateExponents::from_p(std::numeric_limits<double>::infinity()).q() == 1.0);
    CHECK(std::isinf(ConjugateExponents::from_q(1.0).p()));
    CHECK_THROWS_AS(ConjugateExponents::from_p(0.5), DomainError);
}

TEST_CASE("K_p at the centre and the boundary") {
    for (double p : {2.5, 3.0, 4.0, 10.0}) {
        CHECK(profile_K(p, 0.0) == doctest::Approx((2.0 * p - 2.0) / (p - 2.0)).epsilon(1e-14));
    }
    CHECK(profile_K(3.0, 0.3) == doctest::Approx(3.930404762413530).epsilon(1e-12));
    CHECK(profile_K(3.0, 1.0) == doctest::Approx(2.157410404753517).epsilon(1e-13));
    CHECK_THROWS_AS(profile_K(2.0, 0.5), DomainError);
    CHECK_THROWS_AS(profile_K(3.0, 1.5), DomainError);
}

TEST_CASE("K_p matches the exit-radius integral on seeded radii") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> pr(2.2, 12.0), rr(0.0, 0.97);
    for (int k = 0; k < 12; ++k) {
        const double p = pr(rng), rho = rr(rng);
        CHECK(profile_K(p, rho) == doctest::Approx(oracle::singular_mass(q_of(p), rho)).epsilon(1e-9));
    }
    CHECK(profile_K(4.0, 1.0) == doctest::Approx(oracle::singular_mass(4.0 / 3.0, 1.0, 200000)).epsilon(1e-5));
}

TEST_CASE("K_p closed form agrees with its squared-coefficient series") {
    for (double rho : {0.1, 0.5, 0.9}) {
        const auto s = profile_K_parseval(3.0, rho, 1e-13);
        // the closed form itself is summed to about 1e-12 relative
        CHECK(std::abs(s.value - profile_K(3.0, rho)) <= s.tail_bound + 1e-11);
    }
}

TEST_CASE("angular_power_mean against the trapezoid rule") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> br(0.1, 1.5), rr(0.0, 0.9);
    for (int k = 0; k < 25; ++k) {
        const double beta = br(rng), rho = rr(rng);
        const auto v = angular_power_mean(rho, beta, 1e-13);
        CHECK(v.value == doctest::Approx(oracle::angular_mean(rho, beta)).epsilon(1e-11));
    }
    // rho = 1 is finite for 2 beta < 1 only
    CHECK(angular_power_mean(1.0, 0.25, 1e-10).value > 1.0);
    CHECK_THROWS_AS(angular_power_mean(1.0, 0.75, 1e-10), ConvergenceError);
}

TEST_CASE("M_q and N_q against radial integrals of angular means") {
    for (double q : {1.0, 1.25, 1.5, 1.75}) {
        for (double rho : {0.2, 0.6, 0.85}) {
            CHECK(profile_M(q, rho) == doctest::Approx(oracle::m_profile(q, rho)).epsilon(1e-9));
            CHECK(profile_N(q, rho, 1e-13).value == doctest::Approx(oracle::n_profile(q, rho)).epsilon(1e-9));
        }
    }
    CHECK(profile_M(1.0, 0.5) == doctest::Approx(0.5173158092226833).epsilon(1e-13));
    CHECK(profile_N(1.0, 0.5, 1e-14).value == doctest::Approx(0.6945811621013100).epsilon(1e-13));
}

TEST_CASE("M_q(1) is Gauss's Gamma quotient") {
    CHECK(profile_M(1.0, 1.0) == doctest::Approx(4.0 / oracle::kPi).epsilon(1e-15));
    CHECK(profile_M(q_of(3.0), 1.0) == doctest::Approx(2.157410404753517).epsilon(1e-13));
    CHECK(profile_M(q_of(10.0), 1.0) == doctest::Approx(1.373783942795332).epsilon(1e-13));
    const auto s = profile_M_parseval(1.5, 0.7, 1e-13);
    CHECK(std::abs(s.value - profile_M(1.5, 0.7)) <= s.tail_bound + 1e-12);
}

TEST_CASE("N_q(1): hypergeometric and direct routes bracket each other") {
    const double alpha = oracle::kCatalan;
    const auto n1 = profile_N(1.0, 1.0, 1e-9);
    const auto d1 = profile_N_direct(1.0, 1.0, 1e-9);
    CHECK(std::abs(n1.value - (1.0 + 2.0 * alpha) / oracle::kPi) <= n1.tail_bound + 1e-9);
    CHECK(std::abs(d1.value - (1.0 + 2.0 * alpha) / oracle::kPi) <= d1.tail_bound + 1e-9);
    for (double p : {2.5, 3.0, 4.0}) {
        const double q = q_of(p);
        const auto a = profile_N(q, 1.0, 1e-9);
        const auto b = profile_N_direct(q, 1.0, 1e-9);
        CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
    }
}

TEST_CASE("A(p) frozen values and the zeta bound") {
    const double frozen[][2] = {{2.5, 2.430254196228068}, {3.0, 1.576226760964632}, {4.0, 1.197946480004753}};
    for (const auto& [p, v] : frozen) {
        const auto a = a_p_constant(p, 1e-10);
        CHECK(std::abs(a.value - v) <= a.tail_bound + 1e-9);
        CHECK(a.upper() <= a_p_zeta_bound(p));
    }
}

TEST_CASE("profile F and the coefficients of H") {
    for (double q : {1.0, 1.25, 1.5, 1.75}) {
        CHECK(profile_F(q, 0.0) == doctest::Approx(1.0));
        CHECK(profile_F(q, 1.0) < profile_F(q, 0.5));
        for (std::size_t m = 0; m < 60; ++m) CHECK(h_coefficient(q, m) >= 0.0);
    }
    CHECK_THROWS_AS(profile_F(1.5, 1.1), DomainError);
}

TEST_CASE("monotonicity on seeded grids") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> qr(1.0, 1.95);
    for (int k = 0; k < 8; ++k) {
        const double q = qr(rng);
        const double p = q / (q - 1.0);
        double prev_k = std::numeric_limits<double>::infinity(), prev_m = -1.0, prev_n = -1.0, prev_f = 2.0;
        for (int i = 0; i <= 40; ++i) {
            const double rho = i / 40.0;
            const double kv = profile_K(p, rho), mv = profile_M(q, rho);
            const double nv = profile_N(q, rho, 1e-9).value, fv = profile_F(q, rho);
            CHECK(kv <= prev_k);
            CHECK(mv >= prev_m);
            CHECK(nv >= prev_n - 1e-9);
            CHECK(fv <= prev_f);
            prev_k = kv, prev_m = mv, prev_n = nv, prev_f = fv;
        }
    }
}

TEST_CASE("evaluate_profile dispatch and validation") {
    CHECK(evaluate_profile({ProfileTag::K, 4.0}, 0.0) == doctest::Approx(3.0));
    CHECK(evaluate_profile({ProfileTag::M, 1.0}, 1.0) == doctest::Approx(4.0 / oracle::kPi));
    CHECK_THROWS_AS(evaluate_profile({ProfileTag::M, 2.5}, 0.5), DomainError);
}
