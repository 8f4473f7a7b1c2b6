#pragma once

// Scalar special functions: log-Gamma, Pochhammer symbols, generalized
// hypergeometric series on [0, 1], Gauss's summation at unit argument,
// the first zero of J0, Catalan's constant and the Riemann zeta function.
//
// Everything here is pure; no function keeps state between calls.

#include <cstddef>
#include <utility>
#include <vector>

namespace diskop {

/// Partial sum of a series. The exact sum lies in
/// [value - tail_bound, value + tail_bound].
struct SeriesValue {
    double value = 0.0;
    std::size_t terms_used = 1;
    double tail_bound = 0.0;

    double lower() const noexcept { return value - tail_bound; }
    double upper() const noexcept { return value + tail_bound; }
};

/// pFq[upper; lower; argument] with real parameters and argument in [0, 1].
struct HypergeometricSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double argument = 0.0;
};

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs;
    int sign;
};

double ln_gamma(double x);

/// Defined for every x that is not a pole (0, -1, -2, ...).
SignedLogGamma signed_ln_gamma(double x);

/// log of the rising factorial (q)_n = q (q+1) ... (q+n-1), q > 0.
double pochhammer_log(double q, std::size_t n);

/// Sums the hypergeometric series until the tail bound drops below
/// tol * max(1, |value|).
///
/// For argument < 1 (or p <= q) the tail is bounded geometrically from the
/// term ratio. At argument 1 with p = q + 1 the terms decay algebraically
/// like n^-(1 + sum(lower) - sum(upper)); partial sums on a doubling ladder
/// are then Richardson-extrapolated with the known exponents and the bound
/// is the spread of the last two extrapolants.
///
/// Throws ConvergenceError for divergent parameter/argument combinations,
/// DomainError for invalid parameters and PrecisionError when 10^7 terms
/// do not reach the tolerance.
SeriesValue hyp_pfq(const HypergeometricSpec& spec, double tol);

/// 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
double gauss_2f1_at_1(double a, double b, double c);

/// J0 by its power series; accurate for |x| up to about 10.
double bessel_j0(double x);
double bessel_j1(double x);

/// Smallest positive zero of J0, by Newton iteration from 2.4.
double bessel_j0_smallest_zero();

/// Catalan's constant, accelerated so that tail_bound <= tol.
SeriesValue catalan_constant(double tol);

/// Plain partial sum of sum_k (-1)^k / (2k+1)^2 with its alternating-series
/// bound (the first omitted term).
SeriesValue catalan_partial_sum(std::size_t terms);

double riemann_zeta(double s);

/// Bracket ((n+1)^(q/2-1), n^(q/2-1)) for Gamma(n + q/2) / n!.
std::pair<double, double> gautschi_interval(double q, std::size_t n);

/// Maximum number of series terms any routine here will sum.
inline constexpr std::size_t kMaxSeriesTerms = 10'000'000;

}  // namespace diskop
