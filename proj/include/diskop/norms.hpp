#pragma once

// Operator norm catalog, interpolation bounds, extremal lower bounds and the
// angular-mode analysis of J0* on L^2.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "diskop/operators.hpp"

namespace diskop {

enum class NormTarget { SameP, LInfinity };
enum class NormKind { ExactNorm, UpperBound, LowerBound };

std::string to_string(NormTarget t);
std::string to_string(NormKind k);

struct NormQuery {
    OperatorId op;
    /// In [1, inf]; infinity encodes p = inf.
    double source_p;
    NormTarget target = NormTarget::SameP;
};

struct NormResult {
    double value = 0.0;
    NormKind kind = NormKind::UpperBound;
    std::string provenance;
    double error_estimate = 0.0;
};

/// Catalogued norm or bound. Throws UnsupportedQueryError outside the catalog.
NormResult closed_form_norm(const NormQuery& query);

/// Interpolated bound for ||J0*||_p between the L^1, L^2 and L^inf norms.
NormResult riesz_thorin_bound(double p);

/// 4^(1/p) (1 + 2 alpha)^(1 - 1/p) / pi, the Jensen/Fubini bound for ||J0*||_p.
NormResult jensen_bound_j0star(double p);

/// Unit-norm test function at which |T f(b)| attains the profile value.
/// Supported: Cauchy with p > 2; J0 and J0Star with p > 2 or p = inf
/// (J0 needs b != 0).
FieldFn extremal_function(OperatorId op, double p, DiskPoint b);

/// int |f|^p dA of the extremal function (1 analytically); finite p only.
Integral extremal_lp_mass(OperatorId op, double p, DiskPoint b, const DiskRule& rule);

/// |T f(b)| for the extremal f; a lower bound for the L^p -> L^inf norm.
/// For Cauchy the rule must carry a singular strategy (its exponent is set to q).
NormResult lower_bound_via_extremal(OperatorId op, double p, DiskPoint b, const DiskRule& rule);

/// J0* acting on the angular mode f_d(r) e^{i d t}: z -> 2 A_d z^(d-1) for
/// d >= 1 and zero otherwise, A_d = int_0^1 r^(d+1) f_d(r) dr.
struct ModeReduction {
    int d = 0;
    double coefficient = 0.0;

    Complex image(Complex z) const;
};

ModeReduction mode_reduce(int d, const std::function<double(double)>& f_d, int nodes = 128);

struct ModeConstant {
    int d = 1;
    /// 1 / (d (d + 1))
    double exact = 0.0;
    /// Largest Rayleigh quotient ||J0* g||^2 / ||g||^2 over the radial grid.
    double grid = 0.0;
    /// Grid maximizer, normalized to 1 at the outermost node.
    std::vector<double> radii;
    std::vector<double> maximizer;
    /// max_i |maximizer_i - (r_i / r_max)^d|
    double profile_deviation = 0.0;
};

/// Best constant of mode d from power iteration on the rank-one quotient over
/// a Gauss-Legendre radial grid.
ModeConstant mode_best_constant(int d, int grid_points = 1000);

/// sqrt of the largest mode constant over d = 1..max_d.
NormResult l2_norm_numeric(int max_d);

/// Polynomial sum c_ab w^a conj(w)^b.
struct DiskPolynomial {
    struct Term {
        int a;
        int b;
        Complex coeff;
    };
    std::vector<Term> terms;

    Complex operator()(Complex w) const;
};

/// Coefficients uniform in the unit square for every a + b <= degree.
DiskPolynomial random_polynomial(std::mt19937_64& rng, int degree);

/// ||T f||_p / ||f||_p by nested quadrature (finite p >= 1); a lower bound for ||T||_p.
NormResult sampled_norm_ratio(OperatorId op, const FieldFn& f, double p, const DiskRule& outer,
                              const DiskRule& inner);

}  // namespace diskop
