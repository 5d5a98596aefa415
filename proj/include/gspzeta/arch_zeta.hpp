#pragma once

#include "gspzeta/gamma.hpp"

namespace gspzeta {

/// Data of the real local zeta integral.
///   l       Siegel (GSp4) weight, l >= 2
///   l1      GL2 weight; l2 is derived from (l, l1)
///   D       discriminant magnitude, D = 0 or 3 mod 4
///   q_exp   omega_tau(y) = y^q_exp for y > 0
///   ir      the product i*r of the Casimir parameter
///   a_plus  constant in front of W_{l1/2, ir/2}
///   s       evaluation point
struct ArchSpec {
    int l = 0;
    int l1 = 0;
    int l2 = 0;
    int D = 0;
    Complex q_exp{0.0, 0.0};
    Complex ir{0.0, 0.0};
    Complex a_plus{1.0, 0.0};
    Complex s{0.0, 0.0};

    /// Fills l2 and validates the integer data.
    static ArchSpec make(int l, int l1, int D, Complex q_exp, Complex ir, Complex a_plus, Complex s);
    /// Holomorphic discrete series: ir = l1 - 1, a_plus = (4 pi)^{-l1/2}, q = 0.
    static ArchSpec discrete_series(int l, int l1, int D, Complex s);

    /// Re(6s + 2l + l2 - q - 1), which must be positive.
    double convergence_margin() const;
    void validate() const;
};

/// l1 - 2l if l <= l1, else -l1.
int derived_l2(int l, int l1);

/// Closed form  i^{l+l2} a+ pi D^{-3s-l/2+q/2} (4pi)^{-3s+3/2-l+q} / (6s+2l+l2-q-1)
///   * Gamma(3s+l-1+ir/2-q/2) Gamma(3s+l-1-ir/2-q/2) / Gamma(3s+l-l1/2-1/2-q/2).
Complex arch_zeta_closed(const ArchSpec& spec);
/// The simplified form valid for l >= l1 (then l2 = -l1).
Complex arch_zeta_closed_simplified(const ArchSpec& spec);
/// d/ds log of the closed form (digamma based).
Complex arch_zeta_closed_log_derivative(const ArchSpec& spec);

struct ArchQuadrature {
    Complex value;
    double error_estimate = 0.0;
};

/// Direct quadrature of the (lambda, u) double integral, u = (zeta^2 + zeta^-2)/2.
/// Only the D = 0 mod 4 path is implemented.
ArchQuadrature arch_zeta_quadrature(const ArchSpec& spec);

}  // namespace gspzeta
