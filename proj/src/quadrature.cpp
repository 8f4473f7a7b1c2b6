#include "diskop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "diskop/errors.hpp"

namespace diskop {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

struct Accumulated {
    Complex value{0.0, 0.0};
    double abs_sum = 0.0;
    // cancellation error from forming w - b close to the singular point
    double rounding = 0.0;
};

Complex checked_eval(const FieldFn& f, Complex w) {
    const Complex v = f(w);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrand is not finite at node w = " << w.real() << (w.imag() < 0 ? " - " : " + ")
            << std::abs(w.imag()) << "i";
        throw EvaluationError(msg.str());
    }
    return v;
}

GaussLegendreRule build_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> (0, 1); x is the positive root of the pair
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

// int_0^1 2 r g(r) dr with g the angular mean, on an n_r x n_theta grid.
Accumulated tensor_disk_sum(const FieldFn& f, int n_r, int n_theta) {
    const auto& gl = gauss_legendre_unit(n_r);
    const double dtheta = 2.0 * kPi / n_theta;
    Accumulated acc;
    for (int i = 0; i < n_r; ++i) {
        const double r = gl.nodes[i];
        Complex ring{0.0, 0.0};
        double ring_abs = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const Complex v = checked_eval(f, std::polar(r, j * dtheta));
            ring += v;
            ring_abs += std::abs(v);
        }
        const double w = gl.weights[i] * 2.0 * r / n_theta;
        acc.value += w * ring;
        acc.abs_sum += w * ring_abs;
    }
    return acc;
}

// Mobius pull-back of f to the a-disk with b -> 0, radius r = u^m, m = 1/(2-s).
// Since u^(2m-1) = r^s, the u-weight is 2m w_i r^s. Below kMobiusFloor the
// point w would round onto b, so |w - b|^s f(w) is frozen at the floor radius.
constexpr double kMobiusFloor = 1e-10;

Accumulated mobius_sum(const FieldFn& f, Complex b, double s, int n_r, int n_theta) {
    const auto& gl = gauss_legendre_unit(n_r);
    const double m = 1.0 / (2.0 - s);
    const Complex bc = std::conj(b);
    const double lift = (1.0 - std::norm(b)) * (1.0 - std::norm(b));
    const double dtheta = 2.0 * kPi / n_theta;
    Accumulated acc;
    for (int i = 0; i < n_r; ++i) {
        const double r = std::max(std::pow(gl.nodes[i], m), kMobiusFloor);
        Complex ring{0.0, 0.0};
        double ring_abs = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const Complex a = std::polar(r, (j + 0.5) * dtheta);
            const Complex denom = 1.0 - bc * a;
            const Complex w = (b - a) / denom;
            const double jac = lift / (std::norm(denom) * std::norm(denom));
            const Complex v = checked_eval(f, w) * jac;
            ring += v;
            ring_abs += std::abs(v);
        }
        const double weight = gl.weights[i] * 2.0 * m * std::pow(r, s) / n_theta;
        acc.value += weight * ring;
        acc.abs_sum += weight * ring_abs;
        acc.rounding += weight * ring_abs * s * 4.0 * kEps * std::abs(b) / (r * (1.0 - std::norm(b)));
    }
    return acc;
}

// Distance from b to the unit circle in direction e^{i phi}.
double exit_radius(Complex b, double phi) {
    const double c = (std::conj(b) * std::polar(1.0, phi)).real();
    const double d = std::max(0.0, 1.0 - std::norm(b));
    const double root = std::sqrt(c * c + d);
    return c > 0.0 ? d / (c + root) : root - c;
}

Accumulated outside_hole_sum(const FieldFn& f, Complex b, double eps, int n_r, int n_theta) {
    const auto& gl = gauss_legendre_unit(n_r);
    const bool on_circle = std::abs(b) > 1.0 - 1e-14;
    std::vector<double> phis(n_theta);
    std::vector<double> phi_weights(n_theta);
    if (on_circle) {
        // only directions pointing into the disk see a nonempty ray
        const auto& ga = gauss_legendre_unit(n_theta);
        const double start = std::arg(b) + 0.5 * kPi;
        for (int j = 0; j < n_theta; ++j) {
            phis[j] = start + kPi * ga.nodes[j];
            phi_weights[j] = kPi * ga.weights[j];
        }
    } else {
        for (int j = 0; j < n_theta; ++j) {
            phis[j] = (j + 0.5) * 2.0 * kPi / n_theta;
            phi_weights[j] = 2.0 * kPi / n_theta;
        }
    }
    Accumulated acc;
    for (int j = 0; j < n_theta; ++j) {
        const double reach = exit_radius(b, phis[j]);
        if (reach <= eps) continue;
        const double span = std::log(reach / eps);
        const Complex dir = std::polar(1.0, phis[j]);
        Complex ray{0.0, 0.0};
        double ray_abs = 0.0;
        for (int i = 0; i < n_r; ++i) {
            const double rho = eps * std::exp(span * gl.nodes[i]);
            const Complex v = checked_eval(f, b + rho * dir) * (rho * rho * span * gl.weights[i]);
            ray += v;
            ray_abs += std::abs(v);
        }
        acc.value += phi_weights[j] / kPi * ray;
        acc.abs_sum += phi_weights[j] / kPi * ray_abs;
    }
    return acc;
}

Integral with_half_rule_estimate(const Accumulated& full, const Accumulated& half) {
    return {full.value, std::abs(full.value - half.value) + 64.0 * kEps * full.abs_sum + full.rounding};
}

void require_exponent(double s) {
    if (s >= 2.0) throw NonIntegrableError("singular exponent s >= 2 is not integrable over the disk");
    if (!(s > 0.0)) throw DomainError("singular exponent must be positive");
}

Integral annulus_extrapolated(const FieldFn& f, Complex b, double s, const AnnulusExclude& strategy,
                              int n_r, int n_theta) {
    if (std::abs(b) >= 1.0) throw ConfigurationError("annulus exclusion needs an interior centre");
    const double eps = std::min(strategy.epsilon, 0.5 * (1.0 - std::abs(b)));
    Integral levels[3];
    for (int k = 0; k < 3; ++k) {
        const double e = eps / static_cast<double>(1 << k);
        const auto full = outside_hole_sum(f, b, e, n_r, n_theta);
        const auto half = outside_hole_sum(f, b, e, std::max(1, n_r / 2), std::max(1, n_theta / 2));
        levels[k] = with_half_rule_estimate(full, half);
    }
    const double f1 = std::exp2(2.0 - s);
    const double f2 = std::exp2(3.0 - s);
    const Complex r1a = (f1 * levels[1].value - levels[0].value) / (f1 - 1.0);
    const Complex r1b = (f1 * levels[2].value - levels[1].value) / (f1 - 1.0);
    const Complex r2 = (f2 * r1b - r1a) / (f2 - 1.0);
    double quad_err = 0.0;
    for (const auto& l : levels) quad_err += l.abs_error_estimate;
    const double amplification = (f1 + 1.0) / (f1 - 1.0) * (f2 + 1.0) / (f2 - 1.0);
    return {r2, std::abs(r2 - r1b) + amplification * quad_err};
}

}  // namespace

DiskPoint::DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!(std::abs(z) <= 1.0 + 1e-14)) {
        throw DomainError("DiskPoint: point lies outside the closed unit disk");
    }
}

void DiskRule::validate() const {
    if (radial_nodes < 8) throw ConfigurationError("DiskRule: radial_nodes must be >= 8");
    if (angular_nodes < 16) throw ConfigurationError("DiskRule: angular_nodes must be >= 16");
    if (const auto* a = std::get_if<AnnulusExclude>(&singularity)) {
        if (!(a->epsilon > 0.0 && a->epsilon < 0.5)) {
            throw ConfigurationError("DiskRule: annulus epsilon must lie in (0, 0.5)");
        }
        if (!(a->exponent > 0.0 && a->exponent < 2.0)) {
            throw ConfigurationError("DiskRule: singular exponent must lie in (0, 2)");
        }
    }
    if (const auto* m = std::get_if<Mobius>(&singularity)) {
        if (!(m->exponent > 0.0 && m->exponent < 2.0)) {
            throw ConfigurationError("DiskRule: singular exponent must lie in (0, 2)");
        }
        if (m->center && !(std::abs(*m->center) < 1.0)) {
            throw ConfigurationError("DiskRule: Mobius centre must be an interior point");
        }
    }
}

DiskRule DiskRule::recentered(Complex c) const {
    DiskRule copy = *this;
    if (auto* m = std::get_if<Mobius>(&copy.singularity)) m->center = c;
    return copy;
}

DiskRule DiskRule::with_exponent(double s) const {
    DiskRule copy = *this;
    if (auto* m = std::get_if<Mobius>(&copy.singularity)) m->exponent = s;
    if (auto* a = std::get_if<AnnulusExclude>(&copy.singularity)) a->exponent = s;
    return copy;
}

DiskRule DiskRule::resolved_for(Complex z) const {
    DiskRule copy = *this;
    copy.angular_nodes = std::max(copy.angular_nodes, required_angular_nodes(z));
    const double r = std::abs(z);
    if (r > 0.0 && r < 1.0) {
        const int alias_free = static_cast<int>(std::ceil(std::log(1e-15) / std::log(r)));
        copy.angular_nodes = std::max(copy.angular_nodes, alias_free);
    }
    return copy;
}

DiskRule DiskRule::mobius(Complex center, double exponent, int radial, int angular) {
    return {radial, angular, Mobius{center, exponent}};
}

DiskRule DiskRule::annulus(double epsilon, double exponent, int radial, int angular) {
    return {radial, angular, AnnulusExclude{epsilon, exponent}};
}

int required_angular_nodes(Complex z) {
    const double r = std::abs(z);
    if (r <= 0.9) return 0;
    if (r >= 1.0) return std::numeric_limits<int>::max();
    return static_cast<int>(std::ceil(64.0 / (1.0 - r)));
}

const GaussLegendreRule& gauss_legendre_unit(int n) {
    if (n < 1) throw ConfigurationError("gauss_legendre_unit: need at least one node");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(build_gauss_legendre(n));
    return *slot;
}

Integral integrate_disk(const FieldFn& f, const DiskRule& rule) {
    rule.validate();
    const auto full = tensor_disk_sum(f, rule.radial_nodes, rule.angular_nodes);
    const auto half = tensor_disk_sum(f, rule.radial_nodes / 2, rule.angular_nodes / 2);
    return with_half_rule_estimate(full, half);
}

Integral integrate_disk_singular(const FieldFn& f, DiskPoint b, double s, const DiskRule& rule) {
    require_exponent(s);
    rule.validate();
    if (const auto* m = std::get_if<Mobius>(&rule.singularity)) {
        if (m->center && std::abs(*m->center - b.value()) > 1e-14) {
            throw ConfigurationError("integrate_disk_singular: Mobius centre differs from the singular point");
        }
        if (!(b.modulus() < 1.0)) throw ConfigurationError("Mobius substitution needs an interior centre");
        const auto full = mobius_sum(f, b.value(), s, rule.radial_nodes, rule.angular_nodes);
        const auto half = mobius_sum(f, b.value(), s, rule.radial_nodes / 2, rule.angular_nodes / 2);
        return with_half_rule_estimate(full, half);
    }
    if (const auto* a = std::get_if<AnnulusExclude>(&rule.singularity)) {
        return annulus_extrapolated(f, b.value(), s, *a, rule.radial_nodes, rule.angular_nodes);
    }
    throw ConfigurationError("integrate_disk_singular: rule carries no singularity strategy");
}

Integral integrate_outside_disk_around(const FieldFn& f, DiskPoint b, double eps, int radial_nodes,
                                       int angular_nodes) {
    if (!(eps > 0.0)) throw DomainError("integrate_outside_disk_around: eps must be positive");
    if (radial_nodes < 8 || angular_nodes < 16) {
        throw ConfigurationError("integrate_outside_disk_around: too few nodes");
    }
    const auto full = outside_hole_sum(f, b.value(), eps, radial_nodes, angular_nodes);
    const auto half = outside_hole_sum(f, b.value(), eps, radial_nodes / 2, angular_nodes / 2);
    return with_half_rule_estimate(full, half);
}

std::vector<double> truncated_singular_integral(const FieldFn& f, DiskPoint b,
                                                std::span<const double> epsilons, int radial_nodes,
                                                int angular_nodes) {
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        if (!(epsilons[k] > 0.0 && epsilons[k] < 0.5)) {
            throw DomainError("truncated_singular_integral: epsilons must lie in (0, 0.5)");
        }
        if (k > 0 && !(epsilons[k] < epsilons[k - 1])) {
            throw DomainError("truncated_singular_integral: epsilons must be strictly decreasing");
        }
    }
    const FieldFn modulus = [&f](Complex w) { return Complex(std::abs(f(w)), 0.0); };
    std::vector<double> out;
    out.reserve(epsilons.size());
    for (double eps : epsilons) {
        out.push_back(integrate_outside_disk_around(modulus, b, eps, radial_nodes, angular_nodes).value.real());
    }
    return out;
}

}  // namespace diskop
