#include "diskop/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "diskop/errors.hpp"
#include "diskop/profiles.hpp"
#include "diskop/specfun.hpp"

namespace diskop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesTol = 1e-12;

double catalan() { return catalan_constant(1e-14).value; }

double j0_star_linf_value() { return (1.0 + 2.0 * catalan()) / kPi; }

NormResult exact(double value, std::string provenance) {
    return {value, NormKind::ExactNorm, std::move(provenance), 8.0 * kEps * std::abs(value)};
}

NormResult upper(double value, std::string provenance) {
    return {value, NormKind::UpperBound, std::move(provenance), 8.0 * kEps * std::abs(value)};
}

[[noreturn]] void unsupported(const NormQuery& q, const std::string& why) {
    throw UnsupportedQueryError("no catalogued norm for " + to_string(q.op) + " with p = " +
                                (std::isinf(q.source_p) ? std::string("inf") : std::to_string(q.source_p)) +
                                " and target " + to_string(q.target) + ": " + why);
}

// ||c||_p <= 2 j0^(-2(1-1/p)) for p <= 2 and 2 j0^(-2/p) for p >= 2.
double dostanic_bound(double p) {
    const double j0 = bessel_j0_smallest_zero();
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    return p <= 2.0 ? 2.0 * std::pow(j0, -2.0 * (1.0 - inv_p)) : 2.0 * std::pow(j0, -2.0 * inv_p);
}

// ||C_Delta||_p <= 2 j0^(-2(1-1/p)) for p <= 2 and (4/3)(2 j0 / 3)^(-2/p) for p >= 2.
double cdelta_interpolation_bound(double p) {
    const double j0 = bessel_j0_smallest_zero();
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    return p <= 2.0 ? 2.0 * std::pow(j0, -2.0 * (1.0 - inv_p)) : (4.0 / 3.0) * std::pow(2.0 * j0 / 3.0, -2.0 * inv_p);
}

NormResult cauchy_norm(const NormQuery& q, bool to_linf) {
    const double p = q.source_p;
    if (to_linf) {
        if (std::isinf(p)) return exact(2.0, "Cauchy transform on L^inf: sup of K_inf = int |w - z|^-1 dA at z = 0");
        if (!(p > 2.0)) unsupported(q, "the transform does not map L^p into L^inf for p <= 2");
        return exact(std::pow((2.0 * p - 2.0) / (p - 2.0), 1.0 - 1.0 / p),
                     "Cauchy transform L^p -> L^inf: Holder bound K_p(0)^(1-1/p), attained by the kernel-phase extremal");
    }
    if (p == 1.0) return exact(2.0, "Cauchy transform L^1 norm");
    if (p == 2.0) return exact(2.0 / bessel_j0_smallest_zero(), "Cauchy transform L^2 norm 2/j0 (first zero of J0)");
    return upper(dostanic_bound(p), "Cauchy transform L^p: Dostanic interpolation bound");
}

NormResult j0_norm(const NormQuery& q, bool to_linf) {
    const double p = q.source_p;
    if (!to_linf) unsupported(q, "only the L^p -> L^inf norms of J0 are catalogued");
    if (std::isinf(p)) return exact(4.0 / kPi, "J0 on L^inf: M_1(1) = 2F1(1/2, 1/2; 2; 1) = 4/pi");
    if (!(p > 2.0)) unsupported(q, "J0 does not map L^p into L^inf for p <= 2");
    const double q_conj = ConjugateExponents::from_p(p).q();
    if (q_conj > kMaxConjugateQ) throw DomainError("J0 norm: p too close to 2");
    const double log_m = ln_gamma((p - 2.0) / (p - 1.0)) - 2.0 * ln_gamma((3.0 * p - 4.0) / (2.0 * p - 2.0));
    return exact(std::exp((1.0 - 1.0 / p) * log_m),
                 "J0 L^p -> L^inf: M_q(1)^(1-1/p) with M_q(1) = Gamma(2-q) / Gamma(2-q/2)^2");
}

NormResult j0_star_norm(const NormQuery& q, bool to_linf) {
    const double p = q.source_p;
    if (to_linf) {
        if (std::isinf(p)) {
            return exact(j0_star_linf_value(), "J0* on L^inf: N_1(1) = (1 + 2 Catalan) / pi");
        }
        if (!(p > 2.0)) unsupported(q, "J0* does not map L^p into L^inf for p <= 2");
        const auto a = a_p_constant(p, kSeriesTol);
        const double power = 1.0 - 1.0 / p;
        NormResult r = exact(std::pow(a.value, power), "J0* L^p -> L^inf: A(p)^(1-1/p) with A(p) = N_q(1) via 3F2 at 1");
        r.error_estimate += power * std::pow(a.value, -1.0 / p) * a.tail_bound;
        return r;
    }
    if (p == 1.0) return exact(4.0 / kPi, "J0* L^1 norm, equal to the L^inf norm of J0");
    if (p == 2.0) return exact(std::sqrt(0.5), "J0* L^2 norm from the angular-mode reduction, best constant 1/2 at d = 1");
    const auto rt = riesz_thorin_bound(p);
    const auto jensen = jensen_bound_j0star(p);
    return rt.value <= jensen.value ? rt : jensen;
}

NormResult c_delta_norm(const NormQuery& q, bool to_linf) {
    const double p = q.source_p;
    if (to_linf) {
        if (std::isinf(p)) return exact(4.0 / 3.0, "C_Delta L^inf norm (interpolation bound, attained)");
        unsupported(q, "only the L^inf norm of C_Delta is catalogued with an L^inf target");
    }
    if (p == 1.0 || p == 2.0) return exact(cdelta_interpolation_bound(p), "C_Delta L^p norm (interpolation bound, attained at this p)");
    return upper(cdelta_interpolation_bound(p), "C_Delta L^p: interpolation bound through 2/j0 and 4/3");
}

}  // namespace

std::string to_string(NormTarget t) { return t == NormTarget::SameP ? "same" : "linf"; }

std::string to_string(NormKind k) {
    switch (k) {
        case NormKind::ExactNorm: return "EXACT";
        case NormKind::UpperBound: return "UPPER_BOUND";
        case NormKind::LowerBound: return "LOWER_BOUND";
    }
    return "UNKNOWN";
}

NormResult closed_form_norm(const NormQuery& query) {
    const double p = query.source_p;
    if (!(p >= 1.0)) throw DomainError("closed_form_norm: p must lie in [1, inf]");
    // on L^inf the same-p and L^inf targets coincide
    const bool to_linf = query.target == NormTarget::LInfinity || std::isinf(p);
    switch (query.op) {
        case OperatorId::Cauchy: return cauchy_norm(query, to_linf);
        case OperatorId::J0: return j0_norm(query, to_linf);
        case OperatorId::J0Star: return j0_star_norm(query, to_linf);
        case OperatorId::CDelta: return c_delta_norm(query, to_linf);
        case OperatorId::Bergman: unsupported(query, "no Bergman projection norms are catalogued");
    }
    unsupported(query, "unknown operator");
}

NormResult riesz_thorin_bound(double p) {
    if (!(p >= 1.0)) throw DomainError("riesz_thorin_bound: p must lie in [1, inf]");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double value = p >= 2.0 ? std::pow(0.5, inv_p) * std::pow(j0_star_linf_value(), 1.0 - 2.0 * inv_p)
                                  : std::pow(0.5, 1.0 - inv_p) * std::pow(4.0 / kPi, 2.0 * inv_p - 1.0);
    const bool endpoint = p == 1.0 || p == 2.0 || std::isinf(p);
    const std::string source = "J0* L^p: Riesz-Thorin interpolation of the L^1, L^2 and L^inf norms";
    return endpoint ? exact(value, source) : upper(value, source);
}

NormResult jensen_bound_j0star(double p) {
    if (!(p >= 1.0)) throw DomainError("jensen_bound_j0star: p must lie in [1, inf]");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double value = std::pow(4.0, inv_p) / kPi * std::pow(1.0 + 2.0 * catalan(), 1.0 - inv_p);
    return upper(value, "J0* L^p: Jensen and Fubini with sup N_1 = (1 + 2 Catalan)/pi and sup of the dual integral 4/pi");
}

FieldFn extremal_function(OperatorId op, double p, DiskPoint b) {
    if (!(b.modulus() < 1.0)) throw DomainError("extremal_function: b must lie inside the disk");
    const Complex bv = b.value();
    const Complex bc = std::conj(bv);
    const double rho = b.modulus();
    const bool p_inf = std::isinf(p);
    if (!p_inf && !(p > 2.0)) {
        throw UnsupportedQueryError("extremal_function: no extremal family for p <= 2");
    }
    switch (op) {
        case OperatorId::Cauchy: {
            if (p_inf) throw UnsupportedQueryError("extremal_function: Cauchy family needs finite p > 2");
            const auto e = ConjugateExponents::from_p(p);
            const double q = e.q();
            const double scale = std::pow(profile_K(e, rho), -1.0 / p);
            return [=](Complex w) -> Complex {
                const Complex d = w - bv;
                const double m = std::abs(d);
                if (m == 0.0) return {0.0, 0.0};
                return scale * d * std::pow(m, -q);
            };
        }
        case OperatorId::J0: {
            if (rho == 0.0) throw DomainError("extremal_function: the J0 family needs b != 0");
            if (p_inf) {
                return [=](Complex w) -> Complex {
                    const Complex k = bc / (1.0 - w * bc);
                    return k / std::abs(k);
                };
            }
            const double q = ConjugateExponents::from_p(p).q();
            const double scale = std::pow(profile_M(q, rho), -1.0 / p);
            return [=](Complex w) -> Complex {
                const Complex d = 1.0 - w * bc;
                return scale * (bc / d) * std::pow(std::abs(d) / rho, 2.0 - q);
            };
        }
        case OperatorId::J0Star: {
            if (p_inf) {
                return [=](Complex w) -> Complex {
                    const Complex k = w / (1.0 - w * bc);
                    const double m = std::abs(k);
                    return m == 0.0 ? Complex(1.0, 0.0) : k / m;
                };
            }
            const double q = ConjugateExponents::from_p(p).q();
            const double scale = std::pow(profile_N(q, rho, kSeriesTol).value, -1.0 / p);
            return [=](Complex w) -> Complex {
                const double m = std::abs(w);
                if (m == 0.0) return {0.0, 0.0};
                const Complex d = 1.0 - bc * w;
                return scale * (w / d) * std::pow(std::abs(d) / m, 2.0 - q);
            };
        }
        default:
            throw UnsupportedQueryError("extremal_function: no extremal family for " + to_string(op));
    }
}

Integral extremal_lp_mass(OperatorId op, double p, DiskPoint b, const DiskRule& rule) {
    if (std::isinf(p)) throw DomainError("extremal_lp_mass: finite p only");
    const FieldFn f = extremal_function(op, p, b);
    const FieldFn power = [&](Complex w) { return Complex(std::pow(std::abs(f(w)), p), 0.0); };
    if (op == OperatorId::Cauchy) {
        const double q = ConjugateExponents::from_p(p).q();
        DiskRule local = rule.is_singular() ? rule.recentered(b.value()).with_exponent(q)
                                            : DiskRule{rule.radial_nodes, rule.angular_nodes, Mobius{b.value(), q}};
        return integrate_disk_singular(power, b, q, local);
    }
    DiskRule plain = rule.resolved_for(b.value());
    plain.singularity = NoSingularity{};
    return integrate_disk(power, plain);
}

NormResult lower_bound_via_extremal(OperatorId op, double p, DiskPoint b, const DiskRule& rule) {
    const FieldFn f = extremal_function(op, p, b);
    Integral value;
    if (op == OperatorId::Cauchy) {
        const double q = ConjugateExponents::from_p(p).q();
        DiskRule local = rule.with_exponent(q);
        if (std::holds_alternative<Mobius>(local.singularity)) local = local.recentered(b.value());
        value = apply(op, f, b, local);
    } else {
        DiskRule plain = rule.resolved_for(b.value());
        plain.singularity = NoSingularity{};
        value = apply(op, f, b, plain);
    }
    return {std::abs(value.value), NormKind::LowerBound,
            to_string(op) + " extremal test function evaluated at its peak point", value.abs_error_estimate};
}

Complex ModeReduction::image(Complex z) const {
    if (d < 1) return {0.0, 0.0};
    return coefficient * std::pow(z, d - 1);
}

ModeReduction mode_reduce(int d, const std::function<double(double)>& f_d, int nodes) {
    if (d < 1) return {d, 0.0};
    const auto& gl = gauss_legendre_unit(nodes);
    double a_d = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double r = gl.nodes[i];
        a_d += gl.weights[i] * std::pow(r, d + 1) * f_d(r);
    }
    return {d, 2.0 * a_d};
}

ModeConstant mode_best_constant(int d, int grid_points) {
    if (d < 1) throw DomainError("mode_best_constant: d must be >= 1");
    const auto& gl = gauss_legendre_unit(grid_points);
    const std::size_t n = gl.nodes.size();
    // In u_i = sqrt(2 w_i r_i) f_i the quotient is (4/d) (v.u)^2 / |u|^2.
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = gl.nodes[i];
        v[i] = std::pow(r, d + 1) * std::sqrt(gl.weights[i] / (2.0 * r));
    }
    std::vector<double> u(n, 1.0);
    double rayleigh = 0.0;
    for (int it = 0; it < 100; ++it) {
        double dot = 0.0;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot += v[i] * u[i];
            norm2 += u[i] * u[i];
        }
        const double next = 4.0 / d * dot * dot / norm2;
        // apply (4/d) v v^T and renormalize
        double len = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = 4.0 / d * v[i] * dot;
            len += u[i] * u[i];
        }
        len = std::sqrt(len);
        for (auto& x : u) x /= len;
        const bool settled = std::abs(next - rayleigh) <= 4.0 * kEps * next;
        rayleigh = next;
        if (settled) break;
    }
    ModeConstant out;
    out.d = d;
    out.exact = 1.0 / (static_cast<double>(d) * (d + 1.0));
    out.grid = rayleigh;
    out.radii = gl.nodes;
    out.maximizer.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.maximizer[i] = u[i] / std::sqrt(2.0 * gl.weights[i] * gl.nodes[i]);
    const double outer = out.maximizer.back();
    const double r_max = gl.nodes.back();
    for (std::size_t i = 0; i < n; ++i) {
        out.maximizer[i] /= outer;
        out.profile_deviation =
            std::max(out.profile_deviation, std::abs(out.maximizer[i] - std::pow(gl.nodes[i] / r_max, d)));
    }
    return out;
}

NormResult l2_norm_numeric(int max_d) {
    if (max_d < 1) throw DomainError("l2_norm_numeric: max_d must be >= 1");
    double best = 0.0;
    double best_exact = 0.0;
    for (int d = 1; d <= max_d; ++d) {
        const auto c = mode_best_constant(d);
        if (c.grid > best) {
            best = c.grid;
            best_exact = c.exact;
        }
    }
    const double value = std::sqrt(best);
    return {value, NormKind::ExactNorm, "J0* L^2 norm: supremum of the angular-mode constants 1/(d(d+1))",
            std::abs(value - std::sqrt(best_exact)) + 8.0 * kEps};
}

Complex DiskPolynomial::operator()(Complex w) const {
    constexpr int kCached = 16;
    std::array<Complex, kCached> wp;
    std::array<Complex, kCached> wcp;
    wp[0] = wcp[0] = 1.0;
    for (int k = 1; k < kCached; ++k) {
        wp[k] = wp[k - 1] * w;
        wcp[k] = wcp[k - 1] * std::conj(w);
    }
    Complex sum{0.0, 0.0};
    for (const auto& t : terms) {
        const Complex left = t.a < kCached ? wp[t.a] : std::pow(w, t.a);
        const Complex right = t.b < kCached ? wcp[t.b] : std::pow(std::conj(w), t.b);
        sum += t.coeff * left * right;
    }
    return sum;
}

DiskPolynomial random_polynomial(std::mt19937_64& rng, int degree) {
    if (degree < 0) throw DomainError("random_polynomial: degree must be >= 0");
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    DiskPolynomial poly;
    for (int total = 0; total <= degree; ++total) {
        for (int a = 0; a <= total; ++a) {
            const double re = unit(rng);
            const double im = unit(rng);
            poly.terms.push_back({a, total - a, Complex(re, im)});
        }
    }
    return poly;
}

NormResult sampled_norm_ratio(OperatorId op, const FieldFn& f, double p, const DiskRule& outer,
                              const DiskRule& inner) {
    if (!(p >= 1.0) || std::isinf(p)) throw DomainError("sampled_norm_ratio: finite p >= 1 required");
    DiskRule plain = outer;
    plain.singularity = NoSingularity{};
    const FieldFn image = [&](Complex z) {
        const DiskRule local = has_singular_kernel(op) ? inner : inner.resolved_for(z);
        return Complex(std::pow(std::abs(apply(op, f, DiskPoint(z), local).value), p), 0.0);
    };
    const FieldFn source = [&](Complex w) { return Complex(std::pow(std::abs(f(w)), p), 0.0); };
    const auto num = integrate_disk(image, plain);
    const auto den = integrate_disk(source, plain);
    if (!(den.value.real() > 0.0)) throw DomainError("sampled_norm_ratio: input has zero norm");
    const double ratio = std::pow(num.value.real() / den.value.real(), 1.0 / p);
    const double rel = num.abs_error_estimate / std::max(num.value.real(), kEps) +
                       den.abs_error_estimate / den.value.real();
    return {ratio, NormKind::LowerBound, to_string(op) + " ratio ||T f||_p / ||f||_p for a sampled f",
            ratio * rel / p};
}

}  // namespace diskop
