#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "diskop/errors.hpp"
#include "diskop/norms.hpp"
#include "diskop/operators.hpp"
#include "oracles.hpp"

using namespace diskop;
using oracle::ipow;

namespace {

FieldFn monomial(int a, int b) {
    return [a, b](Complex w) { return ipow(w, a) * ipow(std::conj(w), b); };
}

Complex exact_image(OperatorId op, int a, int b, Complex z) {
    switch (op) {
        case OperatorId::Cauchy: return oracle::cauchy_monomial(a, b, z);
        case OperatorId::Bergman: return oracle::bergman_monomial(a, b, z);
        case OperatorId::J0: return oracle::j0_monomial(a, b, z);
        case OperatorId::J0Star: return oracle::j0star_monomial(a, b, z);
        case OperatorId::CDelta: return oracle::cdelta_monomial(a, b, z);
    }
    return {};
}

}  // namespace

TEST_CASE("operator names round-trip") {
    for (auto op : {OperatorId::Cauchy, OperatorId::Bergman, OperatorId::J0, OperatorId::J0Star, OperatorId::CDelta}) {
        CHECK(parse_operator(to_string(op)) == op);
    }
    CHECK(parse_operator("J0_STAR") == OperatorId::J0Star);
    CHECK_THROWS_AS(parse_operator("laplace"), DomainError);
    CHECK(has_singular_kernel(OperatorId::Cauchy));
    CHECK(has_singular_kernel(OperatorId::CDelta));
    CHECK_FALSE(has_singular_kernel(OperatorId::J0Star));
}

TEST_CASE("kernels") {
    const Complex z(0.3, 0.2), w(-0.1, 0.5);
    CHECK(std::abs(kernel(OperatorId::Cauchy, z, w) - 1.0 / (w - z)) < 1e-15);
    CHECK(std::abs(kernel(OperatorId::Bergman, z, w) - 1.0 / ((1.0 - std::conj(w) * z) * (1.0 - std::conj(w) * z))) < 1e-15);
    CHECK(std::abs(kernel(OperatorId::CDelta, z, w) -
                   (kernel(OperatorId::J0Star, z, w) - kernel(OperatorId::Cauchy, z, w))) < 1e-15);
    // J0* kernel is the conjugate transpose of the J0 kernel
    CHECK(std::abs(kernel(OperatorId::J0Star, z, w) - std::conj(kernel(OperatorId::J0, w, z))) < 1e-15);
}

TEST_CASE("bounded transforms of monomials at seeded points") {
    std::mt19937_64 rng(31);
    const DiskRule rule{64, 128};
    for (auto op : {OperatorId::Bergman, OperatorId::J0, OperatorId::J0Star}) {
        for (int k = 0; k < 12; ++k) {
            const int a = k % 5, b = (k * 7) % 4;
            const Complex z = oracle::random_point(rng, 0.7);
            const auto v = apply(op, monomial(a, b), DiskPoint(z), rule);
            CHECK(std::abs(v.value - exact_image(op, a, b, z)) < 1e-12);
        }
    }
}

TEST_CASE("singular transforms of monomials with both strategies") {
    std::mt19937_64 rng(32);
    for (auto op : {OperatorId::Cauchy, OperatorId::CDelta}) {
        for (int k = 0; k < 8; ++k) {
            const int a = k % 4, b = (k * 3) % 3;
            const Complex z = oracle::random_point(rng, 0.7);
            const Complex want = exact_image(op, a, b, z);
            const auto m = apply(op, monomial(a, b), DiskPoint(z), DiskRule::mobius(z, 1.0, 64, 128));
            CHECK(std::abs(m.value - want) <= m.abs_error_estimate + 1e-12);
            const auto an = apply(op, monomial(a, b), DiskPoint(z), DiskRule::annulus(0.05, 1.0, 64, 128));
            CHECK(std::abs(an.value - want) <= an.abs_error_estimate + 1e-10);
        }
    }
}

TEST_CASE("an uncentred Mobius strategy follows the evaluation point") {
    const Complex z(0.4, -0.3);
    const Mobius follow{};
    const auto v = apply(OperatorId::Cauchy, monomial(0, 0), DiskPoint(z), DiskRule{64, 128, follow});
    CHECK(std::abs(v.value + std::conj(z)) < 1e-12);
}

TEST_CASE("configuration errors") {
    const FieldFn one = monomial(0, 0);
    CHECK_THROWS_AS(apply(OperatorId::Cauchy, one, DiskPoint(0.1, 0.0), DiskRule{}), ConfigurationError);
    // boundary layer at |z| = 0.99 needs 64 / 0.01 angular nodes
    CHECK_THROWS_AS(apply(OperatorId::J0Star, one, DiskPoint(0.99, 0.0), DiskRule{64, 128}), ConfigurationError);
    CHECK_NOTHROW(apply(OperatorId::J0Star, one, DiskPoint(0.99, 0.0), DiskRule{64, 128}.resolved_for({0.99, 0.0})));
    CHECK_THROWS_AS(apply(OperatorId::Bergman, one, DiskPoint(1.0, 0.0), DiskRule{64, 128}), DomainError);
}

TEST_CASE("C_Delta = J0* - c on seeded polynomials") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 6; ++k) {
        const auto f = random_polynomial(rng, 3);
        const Complex z = oracle::random_point(rng, 0.6);
        const auto rule = DiskRule::mobius(z, 1.0, 64, 128);
        const auto cd = apply(OperatorId::CDelta, f, DiskPoint(z), rule);
        const auto js = apply(OperatorId::J0Star, f, DiskPoint(z), DiskRule{64, 128});
        const auto c = apply(OperatorId::Cauchy, f, DiskPoint(z), rule);
        CHECK(std::abs(cd.value - (js.value - c.value)) < 1e-11);
    }
}

TEST_CASE("linearity on seeded inputs") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        const auto f = random_polynomial(rng, 2);
        const auto g = random_polynomial(rng, 2);
        const Complex alpha(u(rng), u(rng));
        const FieldFn h = [&](Complex w) { return f(w) + alpha * g(w); };
        const Complex z = oracle::random_point(rng, 0.8);
        const DiskRule rule{32, 64};
        const auto lhs = apply(OperatorId::Bergman, h, DiskPoint(z), rule);
        const auto rhs = apply(OperatorId::Bergman, f, DiskPoint(z), rule).value +
                         alpha * apply(OperatorId::Bergman, g, DiskPoint(z), rule).value;
        CHECK(std::abs(lhs.value - rhs) < 1e-12);
    }
}

TEST_CASE("adjoint pairing on seeded polynomial pairs") {
    std::mt19937_64 rng(42);
    const DiskRule rule{8, 16};
    for (int k = 0; k < 10; ++k) {
        const auto f = random_polynomial(rng, 4);
        const auto g = random_polynomial(rng, 4);
        CHECK(adjoint_pairing_residual(f, g, rule) <= 1e-6);
    }
}

TEST_CASE("d/dz-bar identities") {
    const FieldFn w = monomial(1, 0);
    CHECK(dbar_identity_residual(OperatorId::CDelta, w, DiskPoint(0.2, 0.1), 1e-3, DiskRule::mobius(0.0, 1.0, 64, 128)) < 1e-6);
    CHECK(dbar_identity_residual(OperatorId::Cauchy, w, DiskPoint(0.0, 0.0), 1e-3, DiskRule::mobius(0.0, 1.0, 64, 128)) < 1e-6);
    CHECK(dbar_identity_residual(OperatorId::J0Star, monomial(1, 1), DiskPoint(0.3, 0.0), 1e-3, DiskRule{64, 128}) < 1e-8);
    CHECK_THROWS_AS(dbar_identity_residual(OperatorId::J0, w, DiskPoint(0.9995, 0.0), 1e-3, DiskRule{64, 128}), DomainError);
}
