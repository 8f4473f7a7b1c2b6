#pragma once

// The five integral transforms on the unit disk (dA = dx dy / pi):
//
//   Cauchy    c[f](z)   = int f(w) / (w - z) dA(w)
//   Bergman   B[f](z)   = int f(w) / (1 - conj(w) z)^2 dA(w)
//   J0        J0[f](z)  = int z f(w) / (1 - conj(w) z) dA(w)
//   J0Star    J0*[f](z) = int conj(w) f(w) / (1 - conj(w) z) dA(w)
//   CDelta    C[f](z)   = J0*[f](z) - c[f](z)

#include <string>
#include <string_view>

#include "diskop/quadrature.hpp"

namespace diskop {

enum class OperatorId { Cauchy, Bergman, J0, J0Star, CDelta };

/// Command-line spelling: cauchy, bergman, j0, j0star, cdelta.
std::string to_string(OperatorId op);

/// Inverse of to_string; throws DomainError on an unknown name.
OperatorId parse_operator(std::string_view name);

/// True for the transforms whose kernel is singular at w = z.
bool has_singular_kernel(OperatorId op) noexcept;

/// Kernel k(z, w) of the transform, so that T[f](z) = int k(z, w) f(w) dA(w).
Complex kernel(OperatorId op, Complex z, Complex w);

/// Smallest distance to the unit circle at which the bounded kernels are evaluated.
inline constexpr double kBoundaryMargin = 1e-6;

/// T[f](z) by quadrature.
///
/// Cauchy and CDelta need a singular strategy; a Mobius strategy without a
/// centre is centred at z, and the strategy exponent (default 1) describes
/// |kernel * f| near z. For the bounded kernels the strategy is used only if
/// it is a Mobius strategy with an explicit centre (a singular f); otherwise
/// the plain tensor rule runs and must satisfy the boundary-layer resolution
/// of required_angular_nodes(z).
Integral apply(OperatorId op, const FieldFn& f, DiskPoint z, const DiskRule& rule);

/// |<J0 f, g> - <f, J0* g>| with <u, v> = int u conj(v) dA. The outer integrals
/// use rule; each inner evaluation uses rule.resolved_for(z).
double adjoint_pairing_residual(const FieldFn& f, const FieldFn& g, const DiskRule& rule);

/// |d/dz-bar T[f](z) - expected| with the derivative taken by central
/// differences of step h. expected is f(z) for CDelta, -f(z) for Cauchy and 0
/// for the other (holomorphic-valued) transforms. Throws PrecisionError when
/// quadrature noise divided by h exceeds 1e-4.
double dbar_identity_residual(OperatorId op, const FieldFn& f, DiskPoint z, double h, const DiskRule& rule);

}  // namespace diskop
