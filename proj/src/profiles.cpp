#include "diskop/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "diskop/errors.hpp"

namespace diskop {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kClosedFormTol = 1e-12;

void require_q(double q, const char* who) {
    if (!(q >= 1.0 && q < 2.0)) {
        throw DomainError(std::string(who) + ": q must lie in [1, 2)");
    }
    if (q > kMaxConjugateQ) {
        throw DomainError(std::string(who) +
                          ": q too close to 2 (p -> 2+), the profile blows up there");
    }
}

void require_rho(double rho, const char* who) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw DomainError(std::string(who) + ": rho must lie in [0, 1]");
    }
}

ConjugateExponents exponents_above_two(double p, const char* who) {
    if (!(p > 2.0)) throw DomainError(std::string(who) + ": requires p > 2");
    const auto e = ConjugateExponents::from_p(p);
    require_q(e.q(), who);
    return e;
}

// sum_n c_n(beta)^2 rho^(2n) weight(n), c_n(beta) = (beta)_n / n!, for
// rho < 1, with a geometric tail bound from the observed term ratio.
template <class Weight>
SeriesValue parseval_series(double beta, double rho, double tol, Weight weight) {
    const double x = rho * rho;
    double coeff = 1.0;  // c_n
    double sum = 0.0;
    double abs_sum = 0.0;
    double term = weight(0);
    for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
        sum += term;
        abs_sum += std::abs(term);
        if (x == 0.0) return {sum, 1, 0.0};
        const double nn = static_cast<double>(n);
        coeff *= (nn + beta) / (nn + 1.0);
        const double next = coeff * coeff * std::pow(x, nn + 1.0) * weight(n + 1);
        if (n + 1 < 50) {
            term = next;
            continue;
        }
        const double r1 = std::abs(next / term);
        const double c2 = coeff * (nn + 1.0 + beta) / (nn + 2.0);
        const double after = c2 * c2 * std::pow(x, nn + 2.0) * weight(n + 2);
        const double r2 = std::abs(after / next);
        const double ratio = std::max({x, r1, r2});
        term = next;
        if (ratio >= 1.0) continue;
        const double tail = std::abs(next) / (1.0 - ratio) + 16.0 * kEps * abs_sum;
        if (tail <= tol * std::max(1.0, std::abs(sum))) return {sum, n + 1, tail};
    }
    throw PrecisionError("parseval_series: tolerance not reached within the term cap", sum,
                         std::numeric_limits<double>::infinity());
}

SeriesValue scaled(SeriesValue v, double factor) {
    v.value *= factor;
    v.tail_bound *= std::abs(factor);
    return v;
}

}  // namespace

ConjugateExponents ConjugateExponents::from_p(double p) {
    if (!(p >= 1.0)) throw DomainError("ConjugateExponents: p must be >= 1");
    return ConjugateExponents(std::isinf(p) ? 0.0 : 1.0 / p);
}

ConjugateExponents ConjugateExponents::from_q(double q) {
    if (!(q >= 1.0)) throw DomainError("ConjugateExponents: q must be >= 1");
    return ConjugateExponents(std::isinf(q) ? 1.0 : 1.0 - 1.0 / q);
}

double ConjugateExponents::p() const noexcept {
    return inv_p_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_p_;
}

double ConjugateExponents::q() const noexcept {
    return inv_p_ == 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - inv_p_);
}

void ProfileId::validate() const {
    switch (tag) {
        case ProfileTag::K:
            exponents_above_two(exponent, "ProfileId(K)");
            break;
        case ProfileTag::M:
        case ProfileTag::N:
        case ProfileTag::F:
            require_q(exponent, "ProfileId");
            break;
        case ProfileTag::AngularMean:
            if (!(exponent > 0.0)) throw DomainError("ProfileId(angular mean): beta must be > 0");
            break;
    }
}

SeriesValue angular_power_mean(double rho, double beta, double tol) {
    if (!(beta > 0.0)) throw DomainError("angular_power_mean: beta must be positive");
    if (!(tol > 0.0)) throw DomainError("angular_power_mean: tolerance must be positive");
    require_rho(rho, "angular_power_mean");
    if (rho == 1.0) {
        if (!(2.0 * beta < 1.0)) {
            throw ConvergenceError("angular_power_mean: diverges at rho = 1 unless 2 beta < 1");
        }
        const double v = gauss_2f1_at_1(beta, beta, 1.0);
        return {v, 1, 16.0 * kEps * std::abs(v)};
    }
    return parseval_series(beta, rho, tol, [](std::size_t) { return 1.0; });
}

double profile_K(double p, double rho) {
    return profile_K(exponents_above_two(p, "profile_K"), rho);
}

double profile_K(ConjugateExponents e, double rho) {
    const double q = e.q();
    require_q(q, "profile_K");
    require_rho(rho, "profile_K");
    // (1-t)^(2-q) 2F1[1-q/2, 2-q/2; 1; t] = 2F1[q/2, q/2-1; 1; t] (Euler)
    const double f = rho == 1.0
                         ? gauss_2f1_at_1(0.5 * q, 0.5 * q - 1.0, 1.0)
                         : hyp_pfq({{0.5 * q, 0.5 * q - 1.0}, {1.0}, rho * rho}, kClosedFormTol).value;
    return 2.0 * f / (2.0 - q);
}

SeriesValue profile_K_parseval(double p, double rho, double tol) {
    const double q = exponents_above_two(p, "profile_K_parseval").q();
    require_rho(rho, "profile_K_parseval");
    if (rho == 1.0) throw DomainError("profile_K_parseval: interior points only");
    const double beta = 2.0 - 0.5 * q;
    const auto series = parseval_series(beta, rho, tol, [q](std::size_t n) {
        return 1.0 / (2.0 * static_cast<double>(n) + 2.0 - q);
    });
    return scaled(series, 2.0 * std::pow(1.0 - rho * rho, 2.0 - q));
}

double profile_M(double q, double rho) {
    require_q(q, "profile_M");
    require_rho(rho, "profile_M");
    if (rho == 1.0) return gauss_2f1_at_1(0.5 * q, 0.5 * q, 2.0);
    if (rho == 0.0) return 0.0;
    const auto f = hyp_pfq({{0.5 * q, 0.5 * q}, {2.0}, rho * rho}, kClosedFormTol);
    return f.value * std::pow(rho, q);
}

SeriesValue profile_M_parseval(double q, double rho, double tol) {
    require_q(q, "profile_M_parseval");
    require_rho(rho, "profile_M_parseval");
    if (rho == 1.0) throw DomainError("profile_M_parseval: interior points only");
    const auto series = parseval_series(0.5 * q, rho, tol, [](std::size_t n) {
        return 1.0 / (static_cast<double>(n) + 1.0);
    });
    return scaled(series, std::pow(rho, q));
}

SeriesValue profile_N(double q, double rho, double tol) {
    require_q(q, "profile_N");
    require_rho(rho, "profile_N");
    const auto f = hyp_pfq({{1.0 + 0.5 * q, 0.5 * q, 0.5 * q}, {1.0, 2.0 + 0.5 * q}, rho * rho}, tol);
    return scaled(f, 2.0 / (2.0 + q));
}

SeriesValue profile_N_direct(double q, double rho, double tol) {
    require_q(q, "profile_N_direct");
    require_rho(rho, "profile_N_direct");
    if (!(tol > 0.0)) throw DomainError("profile_N_direct: tolerance must be positive");
    auto weight = [q](std::size_t n) { return 2.0 / (2.0 * static_cast<double>(n) + q + 2.0); };
    if (rho < 1.0) return parseval_series(0.5 * q, rho, tol, weight);

    // Boundary: partial sums on a doubling ladder, tail bracketed by
    //   (n+1)^(q-2) <= (Gamma(n + q/2)/n!)^2 <= n^(q-2)   (n >= 1)
    // and integral comparison of the resulting monotone sums.
    const double half_q = 0.5 * q;
    const double gamma_half_q = std::exp(ln_gamma(half_q));
    const double scale = 2.0 / (gamma_half_q * gamma_half_q);
    const double decay = 2.0 - q;

    double coeff = 1.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    std::size_t n = 0;
    SeriesValue best{0.0, 1, std::numeric_limits<double>::infinity()};
    for (std::size_t rung = 64; rung <= kMaxSeriesTerms; rung *= 2) {
        for (; n < rung; ++n) {
            const double t = coeff * coeff * weight(n);
            sum += t;
            abs_sum += t;
            coeff *= (static_cast<double>(n) + half_q) / (static_cast<double>(n) + 1.0);
        }
        const double big_n = static_cast<double>(rung);
        const double first = std::pow(big_n, q - 2.0) / (2.0 * big_n + q + 2.0);
        const double upper = scale * (first + std::pow(big_n, -decay) / (2.0 * decay));
        const double lower = scale * std::pow(big_n + 1.0, -decay) /
                             (2.0 * decay * (1.0 + q / (2.0 * big_n + 2.0)));
        const double value = sum + 0.5 * (upper + lower);
        const double bound = 0.5 * (upper - lower) + 16.0 * kEps * abs_sum * std::sqrt(big_n);
        best = {value, rung, bound};
        if (bound <= tol * std::max(1.0, std::abs(value))) return best;
    }
    throw PrecisionError("profile_N_direct: tolerance not reached within the term cap", best.value,
                         best.tail_bound);
}

double profile_F(double q, double t) {
    require_q(q, "profile_F");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("profile_F: t must lie in [0, 1]");
    if (t == 1.0) return gauss_2f1_at_1(0.5 * q, 0.5 * q - 1.0, 1.0);
    return hyp_pfq({{0.5 * q, 0.5 * q - 1.0}, {1.0}, t}, kClosedFormTol).value;
}

double h_coefficient(double q, std::size_t m) {
    require_q(q, "h_coefficient");
    const double mm = static_cast<double>(m);
    const double half_q = 0.5 * q;
    const auto neg = signed_ln_gamma(-half_q);  // Gamma(-q/2) < 0 on (0, 2)
    const double log_num = ln_gamma(1.0 + mm - half_q) + ln_gamma(2.0 + mm - half_q);
    const double log_den = ln_gamma(1.0 + mm) + ln_gamma(2.0 + mm) + ln_gamma(2.0 - half_q) + neg.log_abs;
    return -neg.sign * std::exp(log_num - log_den);
}

double a_p_zeta_bound(double p) {
    const double q = exponents_above_two(p, "a_p_zeta_bound").q();
    const double g = std::exp(ln_gamma(0.5 * q));
    return 2.0 * (1.0 / (2.0 + q) + riemann_zeta(3.0 - q) / (2.0 * g * g));
}

SeriesValue a_p_constant(double p, double tol) {
    const auto e = exponents_above_two(p, "a_p_constant");
    const auto a = profile_N(e.q(), 1.0, tol);
    const double bound = a_p_zeta_bound(p);
    if (a.lower() > bound) {
        throw std::logic_error("a_p_constant: A(p) exceeds its zeta-function bound");
    }
    return a;
}

double evaluate_profile(const ProfileId& id, double rho) {
    id.validate();
    constexpr double tol = 1e-10;
    switch (id.tag) {
        case ProfileTag::K: return profile_K(id.exponent, rho);
        case ProfileTag::M: return profile_M(id.exponent, rho);
        case ProfileTag::N: return profile_N(id.exponent, rho, tol).value;
        case ProfileTag::F: return profile_F(id.exponent, rho);
        case ProfileTag::AngularMean: return angular_power_mean(rho, id.exponent, tol).value;
    }
    throw DomainError("evaluate_profile: unknown profile");
}

}  // namespace diskop
