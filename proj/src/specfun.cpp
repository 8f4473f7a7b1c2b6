#include "diskop/specfun.hpp"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "diskop/errors.hpp"

namespace diskop {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Neumaier's variant of compensated summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_sum_ += std::abs(x);
    }
    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
};

// Generates t_n = prod (a_i)_n / prod (b_j)_n * x^n / n! in log space,
// with the sign carried separately.
class HypergeometricTerms {
public:
    explicit HypergeometricTerms(const HypergeometricSpec& spec)
        : spec_(spec), log_x_(std::log(spec.argument)) {}

    double current() const { return vanished_ ? 0.0 : sign_ * std::exp(log_abs_); }
    std::size_t index() const { return n_; }
    bool vanished() const { return vanished_; }

    void advance() {
        const double k = static_cast<double>(n_);
        for (double a : spec_.upper) {
            const double v = a + k;
            if (v == 0.0) vanished_ = true;
            log_abs_ += std::log(std::abs(v));
            if (v < 0.0) sign_ = -sign_;
        }
        for (double b : spec_.lower) {
            const double v = b + k;
            log_abs_ -= std::log(std::abs(v));
            if (v < 0.0) sign_ = -sign_;
        }
        log_abs_ += log_x_ - std::log(k + 1.0);
        ++n_;
    }

    // |t_{k+1} / t_k|
    double ratio_at(std::size_t k) const {
        const double kk = static_cast<double>(k);
        double r = spec_.argument / (kk + 1.0);
        for (double a : spec_.upper) r *= std::abs(a + kk);
        for (double b : spec_.lower) r /= std::abs(b + kk);
        return r;
    }

private:
    const HypergeometricSpec& spec_;
    double log_x_;
    double log_abs_ = 0.0;
    int sign_ = 1;
    std::size_t n_ = 0;
    bool vanished_ = false;
};

double rounding_allowance(const CompensatedSum& s, std::size_t n) {
    return kEps * s.abs_sum() * (10.0 + std::sqrt(static_cast<double>(n)));
}

void validate(const HypergeometricSpec& spec, double tol) {
    if (!(tol > 0.0)) throw DomainError("hyp_pfq: tolerance must be positive");
    if (!(spec.argument >= 0.0 && spec.argument <= 1.0)) {
        throw DomainError("hyp_pfq: argument must lie in [0, 1]");
    }
    for (double b : spec.lower) {
        if (!std::isfinite(b) || is_nonpositive_integer(b)) {
            throw DomainError("hyp_pfq: lower parameter " + std::to_string(b) +
                              " is a nonpositive integer");
        }
    }
    for (double a : spec.upper) {
        if (!std::isfinite(a)) throw DomainError("hyp_pfq: non-finite upper parameter");
    }
}

SeriesValue sum_terminating(const HypergeometricSpec& spec) {
    HypergeometricTerms terms(spec);
    CompensatedSum sum;
    while (!terms.vanished()) {
        sum.add(terms.current());
        terms.advance();
    }
    return {sum.value(), terms.index(), rounding_allowance(sum, terms.index())};
}

SeriesValue sum_geometric(const HypergeometricSpec& spec, double tol) {
    const bool balanced = spec.upper.size() == spec.lower.size() + 1;
    const double ratio_limit = balanced ? spec.argument : 0.0;

    HypergeometricTerms terms(spec);
    CompensatedSum sum;
    double best_bound = std::numeric_limits<double>::infinity();
    while (terms.index() < kMaxSeriesTerms) {
        sum.add(terms.current());
        terms.advance();
        const std::size_t n = terms.index();  // terms t_0 .. t_{n-1} included
        const double next = std::abs(terms.current());
        const double r_now = terms.ratio_at(n);
        const double r_after = terms.ratio_at(n + 1);
        const double rho = std::max({ratio_limit, r_now, r_after});
        if (n < 50 || rho >= 1.0) continue;
        // the tail ratio must have settled: for p = q + 1 it tends to x, for
        // p <= q it decreases to 0
        if (!balanced && r_after > r_now) continue;
        const double tail = next / (1.0 - rho) + rounding_allowance(sum, n);
        best_bound = tail;
        if (tail <= tol * std::max(1.0, std::abs(sum.value()))) return {sum.value(), n, tail};
    }
    throw PrecisionError("hyp_pfq: tolerance not reached within the term cap", sum.value(),
                         best_bound);
}

// Argument 1, p = q + 1: t_n ~ C n^-s with s = 1 + sum(lower) - sum(upper),
// so S_N - S = N^(1-s) (c0 + c1/N + c2/N^2 + ...).
SeriesValue sum_algebraic(const HypergeometricSpec& spec, double tol, double excess) {
    constexpr std::size_t kFirstRung = 64;
    constexpr int kMaxOrder = 6;
    const double leading = excess;  // s - 1

    HypergeometricTerms terms(spec);
    CompensatedSum sum;
    std::vector<std::vector<double>> table;
    double previous_best = std::numeric_limits<double>::quiet_NaN();
    double best = 0.0;
    double best_err = std::numeric_limits<double>::infinity();

    for (std::size_t rung = kFirstRung; rung <= kMaxSeriesTerms; rung *= 2) {
        while (terms.index() < rung) {
            sum.add(terms.current());
            terms.advance();
        }
        const std::size_t j = table.size();
        std::vector<double> row{sum.value()};
        const int order = std::min<int>(static_cast<int>(j), kMaxOrder);
        for (int k = 1; k <= order; ++k) {
            const double factor = std::exp2(leading + (k - 1));
            const double refined = row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / (factor - 1.0);
            row.push_back(refined);
        }
        best = row.back();
        table.push_back(std::move(row));
        if (j >= 3) {
            const double err = 2.0 * std::abs(best - previous_best) +
                               rounding_allowance(sum, terms.index()) * 8.0;
            best_err = err;
            if (err <= tol * std::max(1.0, std::abs(best))) {
                return {best, terms.index(), err};
            }
        }
        previous_best = best;
    }
    throw PrecisionError("hyp_pfq: extrapolated tail did not settle within the term cap", best,
                         best_err);
}

double cvz_alternating_sum(std::size_t n, const auto& term) {
    const double base = 3.0 + std::sqrt(8.0);
    double d = std::pow(base, static_cast<double>(n));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    const double nn = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        c = b - c;
        s += c * term(k);
        b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
    }
    return s / d;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

SignedLogGamma signed_ln_gamma(double x) {
    if (!std::isfinite(x) || is_nonpositive_integer(x)) {
        throw DomainError("signed_ln_gamma: pole or non-finite argument");
    }
    int sign = 0;
    const double value = ::lgamma_r(x, &sign);
    return {value, sign < 0 ? -1 : 1};
}

double pochhammer_log(double q, std::size_t n) {
    if (!(q > 0.0)) throw DomainError("pochhammer_log: q must be positive");
    if (n == 0) return 0.0;
    return ln_gamma(q + static_cast<double>(n)) - ln_gamma(q);
}

SeriesValue hyp_pfq(const HypergeometricSpec& spec, double tol) {
    validate(spec, tol);
    if (spec.argument == 0.0) return {1.0, 1, 0.0};

    const bool terminating =
        std::any_of(spec.upper.begin(), spec.upper.end(), is_nonpositive_integer);
    if (terminating) return sum_terminating(spec);

    const std::size_t p = spec.upper.size();
    const std::size_t q = spec.lower.size();
    if (p > q + 1) throw ConvergenceError("hyp_pfq: p > q + 1 diverges for nonzero argument");

    if (p == q + 1 && spec.argument == 1.0) {
        const double excess = std::accumulate(spec.lower.begin(), spec.lower.end(), 0.0) -
                              std::accumulate(spec.upper.begin(), spec.upper.end(), 0.0);
        if (!(excess > 0.0)) {
            throw ConvergenceError(
                "hyp_pfq: at argument 1 the series needs sum(lower) - sum(upper) > 0");
        }
        return sum_algebraic(spec, tol, excess);
    }
    return sum_geometric(spec, tol);
}

double gauss_2f1_at_1(double a, double b, double c) {
    if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1_at_1: c is a nonpositive integer");
    const double excess = c - a - b;
    if (!(excess > 0.0)) throw ConvergenceError("gauss_2f1_at_1: requires c - a - b > 0");
    if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) return 0.0;
    const auto gc = signed_ln_gamma(c);
    const auto ge = signed_ln_gamma(excess);
    const auto ga = signed_ln_gamma(c - a);
    const auto gb = signed_ln_gamma(c - b);
    const int sign = gc.sign * ge.sign * ga.sign * gb.sign;
    return sign * std::exp(gc.log_abs + ge.log_abs - ga.log_abs - gb.log_abs);
}

double bessel_j0(double x) {
    const double quarter_x2 = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        term *= -quarter_x2 / ((k + 1.0) * (k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && k > x) break;
    }
    return sum;
}

double bessel_j1(double x) {
    const double quarter_x2 = 0.25 * x * x;
    double term = 0.5 * x;
    double sum = term;
    for (int k = 0; k < 200; ++k) {
        term *= -quarter_x2 / ((k + 1.0) * (k + 2.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && k > x) break;
    }
    return sum;
}

double bessel_j0_smallest_zero() {
    double x = 2.4;
    for (int it = 0; it < 50; ++it) {
        // J0' = -J1
        const double step = bessel_j0(x) / bessel_j1(x);
        x += step;
        if (std::abs(step) < 4.0 * kEps * x) break;
    }
    return x;
}

SeriesValue catalan_constant(double tol) {
    if (!(tol > 0.0)) throw DomainError("catalan_constant: tolerance must be positive");
    const double base = 3.0 + std::sqrt(8.0);
    // terms are moments of a positive measure on [0, 1], so the accelerated
    // sum is within 2 a_0 / base^n of the limit
    const double wanted = std::ceil(std::log(2.0 / tol) / std::log(base));
    const std::size_t n = static_cast<std::size_t>(std::clamp(wanted, 1.0, 40.0));
    const double value = cvz_alternating_sum(n, [](std::size_t k) {
        const double odd = 2.0 * static_cast<double>(k) + 1.0;
        return 1.0 / (odd * odd);
    });
    const double bound = 2.0 / std::pow(base, static_cast<double>(n)) + 8.0 * kEps;
    if (bound > tol) throw PrecisionError("catalan_constant: tolerance below rounding floor", value, bound);
    return {value, n, bound};
}

SeriesValue catalan_partial_sum(std::size_t terms) {
    if (terms == 0) throw DomainError("catalan_partial_sum: at least one term required");
    double sum = 0.0;
    for (std::size_t k = terms; k-- > 0;) {
        const double odd = 2.0 * static_cast<double>(k) + 1.0;
        sum += (k % 2 == 0 ? 1.0 : -1.0) / (odd * odd);
    }
    const double next = 2.0 * static_cast<double>(terms) + 1.0;
    return {sum, terms, 1.0 / (next * next)};
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw DomainError("riemann_zeta: requires s > 1");
    const double eta = cvz_alternating_sum(40, [s](std::size_t k) {
        return std::pow(static_cast<double>(k) + 1.0, -s);
    });
    return eta / -std::expm1((1.0 - s) * std::numbers::ln2);
}

std::pair<double, double> gautschi_interval(double q, std::size_t n) {
    if (!(q >= 1.0 && q <= 2.0)) throw DomainError("gautschi_interval: q must lie in [1, 2]");
    if (n == 0) throw DomainError("gautschi_interval: n must be positive");
    const double e = 0.5 * q - 1.0;
    const double nn = static_cast<double>(n);
    return {std::pow(nn + 1.0, e), std::pow(nn, e)};
}

}  // namespace diskop
