#include "gspzeta/arch_zeta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gspzeta/errors.hpp"
#include "gspzeta/quadrature.hpp"
#include "gspzeta/whittaker.hpp"

namespace gspzeta {

namespace {

constexpr double kPi = std::numbers::pi;

Complex i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// base^e for a positive real base (principal branch).
Complex real_pow(double base, Complex e) { return std::exp(e * std::log(base)); }

// Shared factor  i^{l+l2} a+ pi D^{-3s-l/2+q/2} (4pi)^{-3s+3/2-l+q}.
Complex closed_prefactor(const ArchSpec& sp) {
    return i_power(sp.l + sp.l2) * sp.a_plus * kPi * real_pow(sp.D, -3.0 * sp.s - sp.l / 2.0 + sp.q_exp / 2.0) *
           real_pow(4.0 * kPi, -3.0 * sp.s + 1.5 - static_cast<double>(sp.l) + sp.q_exp);
}

}  // namespace

int derived_l2(int l, int l1) { return l <= l1 ? l1 - 2 * l : -l1; }

ArchSpec ArchSpec::make(int l, int l1, int D, Complex q_exp, Complex ir, Complex a_plus, Complex s) {
    ArchSpec spec;
    spec.l = l;
    spec.l1 = l1;
    spec.l2 = derived_l2(l, l1);
    spec.D = D;
    spec.q_exp = q_exp;
    spec.ir = ir;
    spec.a_plus = a_plus;
    spec.s = s;
    spec.validate();
    return spec;
}

ArchSpec ArchSpec::discrete_series(int l, int l1, int D, Complex s) {
    return make(l, l1, D, 0.0, static_cast<double>(l1 - 1), std::pow(4.0 * kPi, -l1 / 2.0), s);
}

double ArchSpec::convergence_margin() const { return (6.0 * s + 2.0 * l + static_cast<double>(l2) - q_exp - 1.0).real(); }

void ArchSpec::validate() const {
    if (l < 2) throw InvalidArgument("Siegel weight l must be >= 2");
    if (D <= 0 || (D % 4 != 0 && D % 4 != 3)) throw InvalidArgument("D must be a positive integer = 0 or 3 mod 4");
    if (l2 != derived_l2(l, l1)) throw InvalidArgument("l2 does not match its definition from (l, l1)");
    if (((l1 - l2) % 2) != 0) throw InvalidArgument("l1 and l2 must have the same parity");
    if (!(convergence_margin() > 0.0)) {
        std::ostringstream os;
        os << "Re(6s + 2l + l2 - q - 1) = " << convergence_margin() << " is not positive";
        throw DivergentParameters(os.str());
    }
}

Complex arch_zeta_closed(const ArchSpec& sp) {
    sp.validate();
    const Complex base = 3.0 * sp.s + static_cast<double>(sp.l) - 1.0 - sp.q_exp / 2.0;
    const Complex denom_gamma = 3.0 * sp.s + static_cast<double>(sp.l) - sp.l1 / 2.0 - 0.5 - sp.q_exp / 2.0;
    const Complex linear = 6.0 * sp.s + 2.0 * sp.l + static_cast<double>(sp.l2) - sp.q_exp - 1.0;
    return closed_prefactor(sp) / linear * complex_gamma(base + sp.ir / 2.0) * complex_gamma(base - sp.ir / 2.0) /
           complex_gamma(denom_gamma);
}

Complex arch_zeta_closed_simplified(const ArchSpec& sp) {
    sp.validate();
    if (sp.l < sp.l1) throw InvalidArgument("the simplified closed form needs l >= l1");
    const Complex base = 3.0 * sp.s + static_cast<double>(sp.l) - 1.0 - sp.q_exp / 2.0;
    const Complex denom_gamma = 3.0 * sp.s + static_cast<double>(sp.l) - sp.l1 / 2.0 + 0.5 - sp.q_exp / 2.0;
    return i_power(sp.l - sp.l1) * (sp.a_plus / 2.0) * kPi *
           real_pow(sp.D, -3.0 * sp.s - sp.l / 2.0 + sp.q_exp / 2.0) *
           real_pow(4.0 * kPi, -3.0 * sp.s + 1.5 - static_cast<double>(sp.l) + sp.q_exp) *
           complex_gamma(base + sp.ir / 2.0) * complex_gamma(base - sp.ir / 2.0) / complex_gamma(denom_gamma);
}

Complex arch_zeta_closed_log_derivative(const ArchSpec& sp) {
    sp.validate();
    const Complex base = 3.0 * sp.s + static_cast<double>(sp.l) - 1.0 - sp.q_exp / 2.0;
    const Complex denom_gamma = 3.0 * sp.s + static_cast<double>(sp.l) - sp.l1 / 2.0 - 0.5 - sp.q_exp / 2.0;
    const Complex linear = 6.0 * sp.s + 2.0 * sp.l + static_cast<double>(sp.l2) - sp.q_exp - 1.0;
    return -3.0 * std::log(static_cast<double>(sp.D)) - 3.0 * std::log(4.0 * kPi) - 6.0 / linear +
           3.0 * complex_digamma(base + sp.ir / 2.0) + 3.0 * complex_digamma(base - sp.ir / 2.0) -
           3.0 * complex_digamma(denom_gamma);
}

ArchQuadrature arch_zeta_quadrature(const ArchSpec& sp) {
    sp.validate();
    if (sp.D % 4 != 0) throw UnsupportedCase("the double integral is implemented for D = 0 mod 4 only");
    const Complex kappa = sp.l1 / 2.0;
    const Complex mu = sp.ir / 2.0;
    const bool closed = whittaker_regime(kappa, mu) == WhittakerRegime::ClosedForm;
    const double sqrt_d = std::sqrt(static_cast<double>(sp.D));
    const Complex lambda_exp = 3.0 * sp.s - 2.5 + static_cast<double>(sp.l) - sp.q_exp / 2.0;
    const Complex u_exp = -3.0 * sp.s - 1.5 + sp.q_exp / 2.0 - static_cast<double>(sp.l + sp.l2);

    // W(x) exp(-x/2) with x = 4 pi lambda sqrt(D) u, in log form where possible.
    auto log_weight = [&](double lambda, double u) {
        const double x = 4.0 * kPi * lambda * sqrt_d * u;
        const Complex powers = lambda_exp * std::log(lambda) + u_exp * std::log(u);
        if (closed) return std::exp(powers + whittaker_log_W_closed(kappa, x) - 0.5 * x);
        return std::exp(powers - 0.5 * x) * whittaker_W(kappa, mu, x);
    };

    double error = 0.0;
    auto inner = [&](double u) {
        auto f = [&](double lambda) { return log_weight(lambda, u); };
        const auto r = exp_sinh_integrate(f, 0.0, {.rel_tol = 1e-12});
        error = std::max(error, r.error_estimate);
        return r.value;
    };
    const auto outer = exp_sinh_integrate(inner, 1.0, {.rel_tol = 1e-11});

    const Complex prefactor = i_power(sp.l + sp.l2) * sp.a_plus * kPi *
                              real_pow(sp.D, -1.5 * sp.s - 0.75 + sp.q_exp / 4.0) *
                              real_pow(4.0 * kPi, sp.q_exp / 2.0);
    ArchQuadrature result;
    result.value = prefactor * outer.value;
    result.error_estimate = std::abs(prefactor) * (outer.error_estimate + error);
    return result;
}

}  // namespace gspzeta
