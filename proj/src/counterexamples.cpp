#include "diskop/counterexamples.hpp"

#include <cmath>
#include <numbers>

#include "diskop/errors.hpp"
#include "diskop/operators.hpp"

namespace diskop {

namespace {

constexpr double kPi = std::numbers::pi;
// inner radius for the radial-growth integrals; the dropped piece is O(eps / (1 - r))
constexpr double kGrowthHole = 1e-12;

double log3(double d) { return std::log(3.0 / d); }

}  // namespace

std::string to_string(CounterexampleId id) {
    switch (id) {
        case CounterexampleId::CauchyP2: return "CAUCHY_P2";
        case CounterexampleId::J0P2: return "J0_P2";
        case CounterexampleId::J0StarP2: return "J0STAR_P2";
    }
    return "UNKNOWN";
}

CounterexampleId parse_counterexample(std::string_view name) {
    for (auto id : {CounterexampleId::CauchyP2, CounterexampleId::J0P2, CounterexampleId::J0StarP2}) {
        if (to_string(id) == name) return id;
    }
    throw DomainError("unknown counterexample '" + std::string(name) + "' (expected CAUCHY_P2, J0_P2 or J0STAR_P2)");
}

Counterexample counterexample(CounterexampleId id, Complex b) {
    const double bound = 2.0 / std::log(1.5);
    switch (id) {
        case CounterexampleId::CauchyP2: {
            if (!(std::abs(b) < 1.0)) throw DomainError("counterexample: b must lie inside the disk");
            FieldFn f = [b](Complex w) -> Complex {
                const Complex d = b - w;
                return 1.0 / (std::conj(d) * log3(std::abs(d)));
            };
            return {id, std::move(f), b, bound, 2.0,
                    "truncated |c[g](b)| over |w - b| > eps grows like 2 log log(3/eps)"};
        }
        case CounterexampleId::J0P2: {
            FieldFn f = [](Complex w) -> Complex { return 1.0 / ((1.0 - w) * log3(std::abs(1.0 - w))); };
            return {id, std::move(f), {1.0, 0.0}, bound, 1.0,
                    "Re J0[g](r) is unbounded as r -> 1; its pointwise limit integrated over |w - 1| > eps grows "
                    "like log log(3/eps)"};
        }
        case CounterexampleId::J0StarP2:
            return {id, j0star_family_member({1.0, 0.0}), {1.0, 0.0}, bound, 1.0,
                    "Re J0*[g_1](r) is unbounded as r -> 1; its pointwise limit integrated over |w - 1| > eps grows "
                    "like log log(3/eps)"};
    }
    throw DomainError("counterexample: unknown id");
}

Integral counterexample_l2_mass(const Counterexample& cx, double eps, int radial_nodes, int angular_nodes) {
    const FieldFn square = [&cx](Complex w) { return Complex(std::norm(cx.f(w)), 0.0); };
    auto outer = integrate_outside_disk_around(square, DiskPoint(cx.center), eps, radial_nodes, angular_nodes);
    if (cx.id == CounterexampleId::CauchyP2) {
        if (!(eps <= 1.0 - std::abs(cx.center))) throw DomainError("counterexample_l2_mass: eps exceeds the distance to the circle");
        // (1/pi) 2 pi int_0^eps d rho / (rho log^2(3/rho))
        outer.value += 2.0 / log3(eps);
    } else {
        // the disk covers an arc of length pi - O(rho) of |w - 1| = rho
        outer.value += 1.0 / log3(eps);
        outer.abs_error_estimate += 3.0 * eps;
    }
    return outer;
}

DivergenceFit divergence_fit(const Counterexample& cx, std::span<const double> epsilons, int radial_nodes,
                             int angular_nodes) {
    if (epsilons.size() < 2) throw DomainError("divergence_fit: need at least two cut-offs");
    FieldFn integrand;
    if (cx.id == CounterexampleId::CauchyP2) {
        const Complex b = cx.center;
        integrand = [b, f = cx.f](Complex w) { return kernel(OperatorId::Cauchy, b, w) * f(w); };
    } else {
        const bool weighted = cx.id == CounterexampleId::J0StarP2;
        integrand = [weighted](Complex w) {
            const double d = std::abs(1.0 - w);
            const double lim = 1.0 / (d * d * log3(d));
            return Complex(weighted ? std::norm(w) * lim : lim, 0.0);
        };
    }
    DivergenceFit fit;
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        if (!(epsilons[k] > 0.0 && epsilons[k] < 0.5) || (k > 0 && !(epsilons[k] < epsilons[k - 1]))) {
            throw DomainError("divergence_fit: cut-offs must be strictly decreasing inside (0, 0.5)");
        }
        const auto v = integrate_outside_disk_around(integrand, DiskPoint(cx.center), epsilons[k], radial_nodes,
                                                     angular_nodes);
        fit.epsilons.push_back(epsilons[k]);
        fit.values.push_back(std::abs(v.value));
    }
    const double n = static_cast<double>(epsilons.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < fit.values.size(); ++k) {
        const double x = std::log(log3(fit.epsilons[k]));
        const double y = fit.values[k];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.raw_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.slope = fit.raw_slope / cx.divergence_scale;
    fit.intercept = (sy - fit.raw_slope * sx) / n / cx.divergence_scale;
    return fit;
}

std::vector<double> radial_growth(const Counterexample& cx, std::span<const double> radii, int radial_nodes,
                                  int angular_nodes) {
    if (cx.id == CounterexampleId::CauchyP2) {
        throw DomainError("radial_growth: defined for the J0 and J0* examples only");
    }
    const OperatorId op = cx.id == CounterexampleId::J0P2 ? OperatorId::J0 : OperatorId::J0Star;
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw DomainError("radial_growth: radii must lie in (0, 1)");
        const FieldFn integrand = [&](Complex w) { return kernel(op, Complex(r, 0.0), w) * cx.f(w); };
        const auto v = integrate_outside_disk_around(integrand, DiskPoint(1.0, 0.0), kGrowthHole, radial_nodes,
                                                     angular_nodes);
        out.push_back(v.value.real());
    }
    return out;
}

double fatou_integrand(double t, double rho, double r) {
    const double c = std::cos(t);
    const double num = r * (1.0 + r * rho * rho - rho * (1.0 + r) * c);
    const double a = 1.0 + r * r * rho * rho - 2.0 * r * rho * c;
    const double d2 = 1.0 + rho * rho - 2.0 * rho * c;
    return num / (a * d2 * std::log(3.0 / std::sqrt(d2)));
}

FieldFn j0star_family_member(Complex z) {
    if (!(std::abs(z) <= 1.0)) throw DomainError("j0star_family_member: z must lie in the closed disk");
    return [z](Complex w) -> Complex {
        const Complex d = 1.0 - std::conj(z) * w;
        return w / (d * log3(std::abs(1.0 - z * std::conj(w))));
    };
}

}  // namespace diskop
