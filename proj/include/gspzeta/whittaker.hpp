#pragma once

#include "gspzeta/gamma.hpp"

namespace gspzeta {

enum class WhittakerRegime {
    ClosedForm,  // (kappa, mu) = (l1/2, (l1-1)/2): W = exp(-x/2) x^{l1/2}
    Integral,    // Re(mu - kappa + 1/2) > 0: Laplace-type integral
};

/// Regime used for (kappa, mu); throws UnsupportedParameters if neither applies.
WhittakerRegime whittaker_regime(Complex kappa, Complex mu);

/// Classical Whittaker function W_{kappa,mu}(x) for x > 0.
Complex whittaker_W(Complex kappa, Complex mu, double x);

/// log W_{kappa,mu}(x) (principal branch), usable where W itself under- or
/// overflows. Closed-form regime only.
Complex whittaker_log_W_closed(Complex kappa, double x);

struct MellinReport {
    Complex quadrature;
    Complex closed;
    double rel_error = 0.0;
    WhittakerRegime regime = WhittakerRegime::Integral;
};

/// Compares  int_0^inf W_{kappa,mu}(x) e^{-x/2} x^{sigma-1} dx  against
/// Gamma(sigma+1/2+mu) Gamma(sigma+1/2-mu) / Gamma(sigma-kappa+1).
MellinReport mellin_whittaker_check(Complex kappa, Complex mu, Complex sigma);

}  // namespace gspzeta
