#pragma once

// L^2 functions whose images under c, J0 and J0* are unbounded, showing that
// none of the three maps L^2 into L^inf.
//
//   CauchyP2   g(w) = 1 / ((conj(b) - conj(w)) log(3/|b - w|))
//   J0P2       g(w) = 1 / ((1 - w) log(3/|1 - w|))
//   J0StarP2   g(w) = w / ((1 - w) log(3/|1 - w|))
//
// Each satisfies ||g||_2^2 <= 2 / log(3/2). The divergence is measured on
// the integral that bounds the transform from below,
//   int_{|w - c| > eps} dA / (|w - c|^2 log(3/|w - c|))  ~  s log log(3/eps),
// where c is the singular point and s = 2 for an interior c, 1 for c = 1.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diskop/quadrature.hpp"

namespace diskop {

enum class CounterexampleId { CauchyP2, J0P2, J0StarP2 };

std::string to_string(CounterexampleId id);
CounterexampleId parse_counterexample(std::string_view name);

struct Counterexample {
    CounterexampleId id;
    FieldFn f;
    /// Singular point of f.
    Complex center;
    /// 2 / log(3/2)
    double l2_bound;
    /// Coefficient of log log(3/eps) in the truncated lower-bound integral.
    double divergence_scale;
    std::string divergence_law;
};

/// b is the singular point of the Cauchy example and ignored otherwise.
Counterexample counterexample(CounterexampleId id, Complex b = {0.2, 0.1});

/// ||g||_2^2: quadrature outside |w - c| < eps plus the analytic inner part.
Integral counterexample_l2_mass(const Counterexample& cx, double eps = 1e-8, int radial_nodes = 256,
                                int angular_nodes = 512);

struct DivergenceFit {
    std::vector<double> epsilons;
    std::vector<double> values;
    /// Least-squares slope of values against log log(3/eps).
    double raw_slope = 0.0;
    /// Slope after dividing values by divergence_scale; 1 for the predicted law.
    double slope = 0.0;
    double intercept = 0.0;
};

/// Truncated lower-bound integrals on the given (strictly decreasing) ladder.
/// For CauchyP2 this is |c[g](b)| over {|w - b| > eps}; for the others it is
/// the pointwise limit of Re T[g](r) as r -> 1, integrated over {|w - 1| > eps}.
DivergenceFit divergence_fit(const Counterexample& cx, std::span<const double> epsilons,
                             int radial_nodes = 256, int angular_nodes = 512);

/// Re T[g](r) for the J0 and J0* examples (T = J0 resp. J0*), r in (0, 1).
/// Computed in polar coordinates about w = 1.
std::vector<double> radial_growth(const Counterexample& cx, std::span<const double> radii,
                                  int radial_nodes = 256, int angular_nodes = 512);

/// G(t, rho, r) = Re(r / (1 - conj(w) r) g(w)) for the J0 example, w = rho e^{it},
/// written in the real form whose positivity is evident.
double fatou_integrand(double t, double rho, double r);

/// g_z(w) = w / ((1 - conj(z) w) log(3/|1 - z conj(w)|)); the J0StarP2 example is g_1.
FieldFn j0star_family_member(Complex z);

}  // namespace diskop
