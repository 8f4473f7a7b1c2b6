#pragma once

// Integration over the unit disk against the normalized area measure
// dA = dx dy / pi (total mass 1).
//
// Regular integrands use a tensor rule: Gauss-Legendre in the radius on
// (0, 1) with the Jacobian r folded into the integrand, and the uniform
// trapezoid rule in the angle. Integrands with an isolated singularity
// |w - b|^-s, 0 < s < 2, use one of two strategies:
//
//   Mobius   substitute w = (b - a) / (1 - conj(b) a), which moves b to the
//            origin, then r = u^(1/(2-s)) so that the r^(1-s) weight becomes
//            constant in u.
//   Annulus  integrate over {|w - b| > eps} in polar coordinates centred at b
//            (log-graded radius) for eps, eps/2, eps/4 and extrapolate away
//            the eps^(2-s) and eps^(3-s) terms.

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace diskop {

using Complex = std::complex<double>;

/// Point of the closed unit disk.
class DiskPoint {
public:
    DiskPoint() = default;
    DiskPoint(double re, double im);
    explicit DiskPoint(Complex z);

    Complex value() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }
    double modulus() const noexcept { return std::abs(z_); }

private:
    Complex z_{0.0, 0.0};
};

/// Integrand handle; must be safe to call concurrently.
using FieldFn = std::function<Complex(Complex)>;

struct NoSingularity {};

struct AnnulusExclude {
    double epsilon = 0.05;
    /// Exponent s of the singularity |w - b|^-s being excluded.
    double exponent = 1.0;
};

struct Mobius {
    /// When set, must coincide with the singular point of the integral.
    std::optional<Complex> center;
    double exponent = 1.0;
};

using SingularityStrategy = std::variant<NoSingularity, AnnulusExclude, Mobius>;

struct DiskRule {
    int radial_nodes = 256;
    int angular_nodes = 512;
    SingularityStrategy singularity = NoSingularity{};

    /// Throws ConfigurationError if a node count or strategy parameter is invalid.
    void validate() const;

    bool is_singular() const noexcept {
        return !std::holds_alternative<NoSingularity>(singularity);
    }

    /// Copy whose Mobius strategy (if any) is centred at c.
    DiskRule recentered(Complex c) const;

    /// Copy whose singular strategy (if any) expects exponent s.
    DiskRule with_exponent(double s) const;

    /// Copy with enough angular nodes that the modes of 1/(1 - conj(w) z)
    /// do not alias (|z|^M below 1e-15) and at least required_angular_nodes(z).
    DiskRule resolved_for(Complex z) const;

    static DiskRule mobius(Complex center, double exponent = 1.0, int radial = 256, int angular = 512);
    static DiskRule annulus(double epsilon, double exponent = 1.0, int radial = 256, int angular = 512);
};

/// Angular nodes required at evaluation point z (64 / (1 - |z|) beyond 0.9).
int required_angular_nodes(Complex z);

struct Integral {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
};

/// Gauss-Legendre nodes and weights on (0, 1); weights sum to 1.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached per node count; thread-safe.
const GaussLegendreRule& gauss_legendre_unit(int n);

/// Tensor-product approximation of int_D f dA. The error estimate compares
/// against the rule with half the nodes in each direction.
Integral integrate_disk(const FieldFn& f, const DiskRule& rule);

/// int_D f dA for f with |f(w)| |w - b|^s bounded near b.
Integral integrate_disk_singular(const FieldFn& f, DiskPoint b, double s, const DiskRule& rule);

/// int over D minus {|w - b| <= eps} of f dA, in polar coordinates centred at
/// b with a log-graded radius. b may lie on the unit circle.
Integral integrate_outside_disk_around(const FieldFn& f, DiskPoint b, double eps, int radial_nodes,
                                       int angular_nodes);

/// int over D minus {|w - b| <= eps} of |f| dA for each eps in the list
/// (strictly decreasing, inside (0, 0.5)).
std::vector<double> truncated_singular_integral(const FieldFn& f, DiskPoint b,
                                                std::span<const double> epsilons,
                                                int radial_nodes = 256, int angular_nodes = 512);

}  // namespace diskop
