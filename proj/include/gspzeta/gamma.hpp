#pragma once

#include <complex>

namespace gspzeta {

using Complex = std::complex<double>;

/// Gamma(z) by the Lanczos approximation (g = 7, 9 terms), with reflection for
/// Re z < 1/2. Throws PoleError within 1e-12 of a non-positive integer.
Complex complex_gamma(Complex z);
/// Principal branch of log Gamma(z) for Re z >= 1/2, continued by reflection.
Complex complex_log_gamma(Complex z);
/// Psi(z) = Gamma'(z)/Gamma(z).
Complex complex_digamma(Complex z);

}  // namespace gspzeta
