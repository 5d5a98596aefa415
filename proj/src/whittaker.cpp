#include "gspzeta/whittaker.hpp"

#include <cmath>
#include <sstream>

#include "gspzeta/errors.hpp"
#include "gspzeta/quadrature.hpp"

namespace gspzeta {

namespace {

constexpr double kExact = 1e-14;

bool is_closed_form(Complex kappa, Complex mu) {
    if (std::abs(kappa.imag()) > kExact || std::abs(mu.imag()) > kExact) return false;
    const double twice = 2.0 * kappa.real();
    if (std::abs(twice - std::round(twice)) > kExact) return false;
    return std::abs(mu.real() - (kappa.real() - 0.5)) < kExact;
}

// log of the integrand of the Laplace-type representation, including the
// exp(-x/2) x^kappa prefactor:
//   -x/2 + kappa log x - t + a log t + b (log(x + t) - log x)
Complex log_integrand(Complex kappa, Complex a, Complex b, double x, double t) {
    const double lx = std::log(x);
    return -0.5 * x + kappa * lx - t + a * std::log(t) + b * (std::log1p(t / x));
}

}  // namespace

WhittakerRegime whittaker_regime(Complex kappa, Complex mu) {
    if (is_closed_form(kappa, mu)) return WhittakerRegime::ClosedForm;
    if ((mu - kappa + 0.5).real() > 0.0) return WhittakerRegime::Integral;
    std::ostringstream os;
    os << "W_{kappa,mu} with kappa = " << kappa << ", mu = " << mu
       << " is neither in closed form nor has Re(mu - kappa + 1/2) > 0";
    throw UnsupportedParameters(os.str());
}

Complex whittaker_log_W_closed(Complex kappa, double x) { return -0.5 * x + kappa * std::log(x); }

Complex whittaker_W(Complex kappa, Complex mu, double x) {
    if (!(x > 0.0)) throw InvalidArgument("Whittaker W needs x > 0");
    if (whittaker_regime(kappa, mu) == WhittakerRegime::ClosedForm) return std::exp(whittaker_log_W_closed(kappa, x));
    const Complex a = mu - kappa - 0.5;
    const Complex b = mu + kappa - 0.5;
    const Complex log_norm = complex_log_gamma(mu - kappa + 0.5);
    auto integrand = [&](double t) { return std::exp(log_integrand(kappa, a, b, x, t) - log_norm); };
    return exp_sinh_integrate(integrand, 0.0, {.rel_tol = 1e-12}).value;
}

MellinReport mellin_whittaker_check(Complex kappa, Complex mu, Complex sigma) {
    MellinReport report;
    report.regime = whittaker_regime(kappa, mu);
    if (report.regime == WhittakerRegime::ClosedForm) {
        // The integrand is exp(-x) x^{sigma+kappa-1}.
        if ((sigma + kappa).real() <= 0.0) throw InvalidArgument("Mellin integral diverges: Re(sigma + kappa) <= 0");
        auto integrand = [&](double x) { return std::exp(-x + (sigma + kappa - 1.0) * std::log(x)); };
        report.quadrature = exp_sinh_integrate(integrand, 0.0, {.rel_tol = 1e-12}).value;
        // kappa - mu = 1/2 makes Gamma(sigma+1/2-mu) and Gamma(sigma-kappa+1) cancel.
        report.closed = complex_gamma(sigma + 0.5 + mu);
    } else {
        if ((sigma + 0.5 + mu).real() <= 0.0 || (sigma + 0.5 - mu).real() <= 0.0) {
            throw InvalidArgument("Mellin integral needs Re(sigma + 1/2 +- mu) > 0");
        }
        auto integrand = [&](double x) {
            return whittaker_W(kappa, mu, x) * std::exp(-0.5 * x + (sigma - 1.0) * std::log(x));
        };
        report.quadrature = exp_sinh_integrate(integrand, 0.0, {.rel_tol = 1e-11}).value;
        report.closed = complex_gamma(sigma + 0.5 + mu) * complex_gamma(sigma + 0.5 - mu) /
                        complex_gamma(sigma - kappa + 1.0);
    }
    report.rel_error = std::abs(report.quadrature - report.closed) / std::abs(report.closed);
    return report;
}

}  // namespace gspzeta
