#include "diskop/operators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "diskop/errors.hpp"

namespace diskop {

namespace {

constexpr std::array<std::pair<std::string_view, OperatorId>, 5> kNames{{
    {"cauchy", OperatorId::Cauchy},
    {"bergman", OperatorId::Bergman},
    {"j0", OperatorId::J0},
    {"j0star", OperatorId::J0Star},
    {"cdelta", OperatorId::CDelta},
}};

constexpr double kDbarNoiseLimit = 1e-4;

Integral apply_singular(OperatorId op, const FieldFn& f, DiskPoint z, const DiskRule& rule) {
    if (!rule.is_singular()) {
        throw ConfigurationError(to_string(op) + ": kernel is singular at w = z; the rule needs a singular strategy");
    }
    DiskRule local = rule;
    double exponent = 1.0;
    if (auto* m = std::get_if<Mobius>(&local.singularity)) {
        if (!m->center) m->center = z.value();
        exponent = m->exponent;
    } else if (const auto* a = std::get_if<AnnulusExclude>(&local.singularity)) {
        exponent = a->exponent;
    }
    const Complex zv = z.value();
    const FieldFn integrand = [&](Complex w) { return kernel(op, zv, w) * f(w); };
    return integrate_disk_singular(integrand, z, exponent, local);
}

Integral apply_bounded(OperatorId op, const FieldFn& f, DiskPoint z, const DiskRule& rule) {
    if (z.modulus() > 1.0 - kBoundaryMargin) {
        throw DomainError(to_string(op) + ": evaluation point too close to the unit circle");
    }
    const Complex zv = z.value();
    const FieldFn integrand = [&](Complex w) { return kernel(op, zv, w) * f(w); };
    if (const auto* m = std::get_if<Mobius>(&rule.singularity); m && m->center) {
        return integrate_disk_singular(integrand, DiskPoint(*m->center), m->exponent, rule);
    }
    if (rule.angular_nodes < required_angular_nodes(zv)) {
        throw ConfigurationError(to_string(op) + ": angular resolution too low for |z| = " +
                                 std::to_string(z.modulus()) + "; use DiskRule::resolved_for");
    }
    DiskRule plain = rule;
    plain.singularity = NoSingularity{};
    return integrate_disk(integrand, plain);
}

// <u, v> = int u conj(v) dA where u = T[f] is itself a quadrature.
Complex pairing_with_transform(OperatorId op, const FieldFn& f, const FieldFn& g, const DiskRule& rule,
                               bool transform_left) {
    const FieldFn outer = [&](Complex z) {
        const DiskPoint p(z);
        if (transform_left) {
            return apply(op, f, p, rule.resolved_for(z)).value * std::conj(g(z));
        }
        return f(z) * std::conj(apply(op, g, p, rule.resolved_for(z)).value);
    };
    DiskRule plain = rule;
    plain.singularity = NoSingularity{};
    return integrate_disk(outer, plain).value;
}

}  // namespace

std::string to_string(OperatorId op) {
    for (const auto& [name, id] : kNames) {
        if (id == op) return std::string(name);
    }
    return "unknown";
}

OperatorId parse_operator(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::erase(lower, '_');
    for (const auto& [n, id] : kNames) {
        if (n == lower) return id;
    }
    throw DomainError("unknown operator '" + std::string(name) + "' (expected cauchy, bergman, j0, j0star or cdelta)");
}

bool has_singular_kernel(OperatorId op) noexcept {
    return op == OperatorId::Cauchy || op == OperatorId::CDelta;
}

Complex kernel(OperatorId op, Complex z, Complex w) {
    const Complex wc = std::conj(w);
    switch (op) {
        case OperatorId::Cauchy: return 1.0 / (w - z);
        case OperatorId::Bergman: {
            const Complex d = 1.0 - wc * z;
            return 1.0 / (d * d);
        }
        case OperatorId::J0: return z / (1.0 - wc * z);
        case OperatorId::J0Star: return wc / (1.0 - wc * z);
        case OperatorId::CDelta: return 1.0 / (z - w) + wc / (1.0 - wc * z);
    }
    return {};
}

Integral apply(OperatorId op, const FieldFn& f, DiskPoint z, const DiskRule& rule) {
    if (!(z.modulus() < 1.0)) throw DomainError(to_string(op) + ": evaluation point must satisfy |z| < 1");
    rule.validate();
    return has_singular_kernel(op) ? apply_singular(op, f, z, rule) : apply_bounded(op, f, z, rule);
}

double adjoint_pairing_residual(const FieldFn& f, const FieldFn& g, const DiskRule& rule) {
    rule.validate();
    const Complex lhs = pairing_with_transform(OperatorId::J0, f, g, rule, true);
    const Complex rhs = pairing_with_transform(OperatorId::J0Star, f, g, rule, false);
    return std::abs(lhs - rhs);
}

double dbar_identity_residual(OperatorId op, const FieldFn& f, DiskPoint z, double h, const DiskRule& rule) {
    if (!(h > 0.0)) throw DomainError("dbar_identity_residual: step must be positive");
    const Complex zv = z.value();
    const std::array<Complex, 4> offsets{Complex(h, 0.0), Complex(-h, 0.0), Complex(0.0, h), Complex(0.0, -h)};
    std::array<Integral, 4> values;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        const Complex at = zv + offsets[k];
        if (!(std::abs(at) < 1.0)) throw DomainError("dbar_identity_residual: stencil leaves the disk");
        // a Mobius strategy has to follow the moving evaluation point
        DiskRule local = has_singular_kernel(op) ? rule.recentered(at) : rule;
        values[k] = apply(op, f, DiskPoint(at), local);
    }
    const Complex dbar =
        ((values[0].value - values[1].value) + Complex(0.0, 1.0) * (values[2].value - values[3].value)) / (4.0 * h);
    double noise = 0.0;
    for (const auto& v : values) noise += v.abs_error_estimate;
    noise /= 4.0 * h;
    if (noise > kDbarNoiseLimit) {
        throw PrecisionError("dbar_identity_residual: quadrature noise too large for the step", std::abs(dbar), noise);
    }
    Complex expected{0.0, 0.0};
    if (op == OperatorId::CDelta) expected = f(zv);
    if (op == OperatorId::Cauchy) expected = -f(zv);
    return std::abs(dbar - expected);
}

}  // namespace diskop
