#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "diskop/counterexamples.hpp"
#include "diskop/errors.hpp"
#include "oracles.hpp"

using namespace diskop;

namespace {
const std::vector<double> kLadder{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

TEST_CASE("names round-trip") {
    for (auto id : {CounterexampleId::CauchyP2, CounterexampleId::J0P2, CounterexampleId::J0StarP2}) {
        CHECK(parse_counterexample(to_string(id)) == id);
    }
    CHECK_THROWS_AS(parse_counterexample("BERGMAN_P2"), DomainError);
}

TEST_CASE("L^2 masses stay below 2 / log(3/2)") {
    const double bound = 2.0 / std::log(1.5);
    for (auto id : {CounterexampleId::CauchyP2, CounterexampleId::J0P2, CounterexampleId::J0StarP2}) {
        const auto cx = counterexample(id);
        CHECK(cx.l2_bound == doctest::Approx(bound));
        const auto m = counterexample_l2_mass(cx, 1e-8, 128, 256);
        CHECK(m.value.real() > 0.0);
        CHECK(m.value.real() <= bound + 1e-3);
    }
}

TEST_CASE("Cauchy example mass matches a radial oracle at the centre") {
    // b = 0: ||g||^2 = int_0^1 2 r dr / (r^2 log^2(3/r)) = 2 / log 3
    const auto cx = counterexample(CounterexampleId::CauchyP2, {0.0, 0.0});
    const auto m = counterexample_l2_mass(cx, 1e-8, 128, 256);
    CHECK(m.value.real() == doctest::Approx(2.0 / std::log(3.0)).epsilon(1e-8));
    CHECK_THROWS_AS(counterexample(CounterexampleId::CauchyP2, {1.0, 0.0}), DomainError);
}

TEST_CASE("divergence slopes follow log log(3/eps)") {
    for (auto id : {CounterexampleId::CauchyP2, CounterexampleId::J0P2, CounterexampleId::J0StarP2}) {
        const auto fit = divergence_fit(counterexample(id), kLadder, 128, 256);
        CHECK(fit.values.size() == kLadder.size());
        for (std::size_t k = 1; k < fit.values.size(); ++k) CHECK(fit.values[k] > fit.values[k - 1]);
        CHECK(fit.slope >= 0.9);
        CHECK(fit.slope <= 1.1);
    }
    const std::vector<double> up{1e-4, 1e-2};
    CHECK_THROWS_AS(divergence_fit(counterexample(CounterexampleId::J0P2), up), DomainError);
}

TEST_CASE("the J0 images grow along the radius") {
    const std::vector<double> radii{0.9, 0.99, 0.999};
    for (auto id : {CounterexampleId::J0P2, CounterexampleId::J0StarP2}) {
        const auto g = radial_growth(counterexample(id), radii, 128, 256);
        CHECK(g[1] > g[0]);
        CHECK(g[2] > g[1]);
    }
    CHECK_THROWS_AS(radial_growth(counterexample(CounterexampleId::CauchyP2), radii), DomainError);
}

TEST_CASE("G(t, rho, r) is positive and equals the complex integrand") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> t(-oracle::kPi, oracle::kPi), u(0.0, 1.0);
    const auto g = counterexample(CounterexampleId::J0P2).f;
    for (int k = 0; k < 1000; ++k) {
        const double tt = t(rng), rho = u(rng), r = u(rng);
        if (rho == 1.0 && tt == 0.0) continue;
        const double v = fatou_integrand(tt, rho, r);
        CHECK(v > 0.0);
        if (rho > 0.0 && rho < 1.0) {
            const Complex w = std::polar(rho, tt);
            const double direct = (r / (1.0 - std::conj(w) * r) * g(w)).real();
            CHECK(v == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("the J0* family is largest at z = 1") {
    const DiskRule plain{64, 128};
    const double at_one = counterexample_l2_mass(counterexample(CounterexampleId::J0StarP2), 1e-8, 128, 256).value.real();
    for (Complex z : {Complex(0.0, 0.0), Complex(0.5, 0.0), Complex(0.0, 0.9)}) {
        const auto gz = j0star_family_member(z);
        const auto m = integrate_disk([&](Complex w) { return Complex(std::norm(gz(w)), 0.0); }, plain.resolved_for(z));
        CHECK(m.value.real() <= at_one);
    }
    CHECK_THROWS_AS(j0star_family_member({1.5, 0.0}), DomainError);
}
