#pragma once

// Radial profile functions behind the operator norms.
//
//   K_p(rho) = int_D |w - z|^-q dA(w)           (|z| = rho, q = p/(p-1))
//   M_q(rho) = int_D |z|^q / |1 - conj(w) z|^q dA(w)
//   N_q(rho) = int_D |w|^q / |1 - z conj(w)|^q dA(w)
//   F(t)     = (1 - t)^(2-q) 2F1[1 - q/2, 2 - q/2; 1; t]
//
// N_1 and M_1 are the two classical integrals I1 and I2; they are exposed
// as aliases rather than separate implementations.

#include <cstddef>

#include "diskop/specfun.hpp"

namespace diskop {

/// Largest conjugate exponent accepted; the K and N profiles blow up as q -> 2.
inline constexpr double kMaxConjugateQ = 2.0 - 1e-6;

/// Pair (p, q) with 1/p + 1/q = 1, represented through 1/p.
class ConjugateExponents {
public:
    /// p in [1, inf]; pass std::numeric_limits<double>::infinity() for p = inf.
    static ConjugateExponents from_p(double p);
    static ConjugateExponents from_q(double q);

    double p() const noexcept;
    double q() const noexcept;
    double inv_p() const noexcept { return inv_p_; }
    double inv_q() const noexcept { return 1.0 - inv_p_; }

private:
    explicit ConjugateExponents(double inv_p) : inv_p_(inv_p) {}
    double inv_p_;
};

enum class ProfileTag { K, M, N, F, AngularMean };

/// Profile selector. exponent is p for K, q for M/N/F and beta for the
/// angular mean.
struct ProfileId {
    ProfileTag tag;
    double exponent;

    void validate() const;
};

/// (1/2pi) int dtheta / |1 - rho e^{i theta}|^(2 beta)
///   = sum_n (Gamma(n+beta) / (n! Gamma(beta)))^2 rho^(2n).
SeriesValue angular_power_mean(double rho, double beta, double tol);

double profile_K(double p, double rho);
double profile_K(ConjugateExponents e, double rho);

/// K_p by the squared-coefficient series; rho < 1 only.
SeriesValue profile_K_parseval(double p, double rho, double tol);

double profile_M(double q, double rho);

/// M_q by the squared-coefficient series; rho < 1 only.
SeriesValue profile_M_parseval(double q, double rho, double tol);

/// N_q through 3F2[1 + q/2, q/2, q/2; 1, 2 + q/2; rho^2].
SeriesValue profile_N(double q, double rho, double tol);

/// N_q by direct summation of 2 sum c_n^2 rho^(2n) / (2n + q + 2). At rho = 1
/// the tail is bracketed with Gautschi's inequality, giving a rigorous bound.
SeriesValue profile_N_direct(double q, double rho, double tol);

double profile_F(double q, double t);

/// Coefficient a_m of H(t) = sum a_m t^m, the factor that fixes the sign of F'.
double h_coefficient(double q, std::size_t m);

/// A(p) = N_q(1). Throws std::logic_error if the zeta bound is violated.
SeriesValue a_p_constant(double p, double tol);

/// 2 (1/(2+q) + zeta(3-q) / (2 Gamma(q/2)^2)), an upper bound for A(p).
double a_p_zeta_bound(double p);

inline SeriesValue i1(double rho, double tol) { return profile_N(1.0, rho, tol); }
inline double i2(double rho) { return profile_M(1.0, rho); }

/// Dispatch used by the table generator.
double evaluate_profile(const ProfileId& id, double rho);

}  // namespace diskop
