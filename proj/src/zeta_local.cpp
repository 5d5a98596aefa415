#include "gspzeta/zeta_local.hpp"

#include <string>

#include "gspzeta/errors.hpp"

namespace gspzeta {

namespace {

QScalar inv(const QScalar& x) { return x.inverse(); }

QScalar q_power(std::int64_t q, std::int64_t k) { return qscalar_pow(QScalar(q), k); }

void require_kind(const Gl2Local& rep, Gl2Kind kind, const char* op) {
    if (rep.kind != kind) {
        throw UnsupportedCase(std::string(op) + " does not apply to " + std::string(to_string(rep.kind)));
    }
}

// chi(varpi) for chi|F^x = (Lambda chi0)^{-1} restricted, Lambda|F^x = omega_pi.
QScalar chi_at_varpi(const SatakeParams& satake, const Gl2Local& rep) {
    return inv(satake.central_character() * rep.omega_tau);
}

// 1 - c q^{-1} T for a unit c built from the Bessel and central characters.
PolyT linear_q1(const QScalar& c, std::int64_t q) { return PolyT::one_minus(c * q_power(q, -1)); }

}  // namespace

void LocalInstance::validate() const {
    satake.validate();
    bessel.validate();
    rep.validate();
    if (rep.q != satake.q) {
        throw InvalidArgument("GL2 datum and Satake parameters use different q");
    }
    if (bessel.lambda_varpi != omega_pi()) {
        throw InvalidBesselDatum("Lambda(varpi) must equal omega_pi(varpi) = " + omega_pi().to_string());
    }
    if (order < 0) throw InvalidArgument("truncation order must be non-negative");
}

SeriesT zeta_series_lhs(const LocalInstance& inst) {
    inst.validate();
    if (inst.rep.kind == Gl2Kind::UnramifiedPS) {
        throw UnsupportedCase("the m = 0 reduction needs n > 0; use unramified_closed for unramified tau");
    }
    const SeriesT bessel = bessel_coeffs(inst.satake, inst.bessel, inst.order);
    const QScalar omega_inv = inv(inst.omega_pi()) * inv(inst.rep.omega_tau);
    const std::int64_t q = inst.q();
    SeriesT out(inst.order);
    for (std::int64_t l = 0; l <= inst.order; ++l) {
        // |N(varpi^l) varpi^{-l}|^{3(s+1/2)} = q^{-3l/2} T^l, then the q^{3l} volume factor.
        const QScalar weight = qscalar_pow(omega_inv, l) * QScalar::half_power(q, -3 * l) *
                               newform_value(inst.rep, l) * q_power(q, 3 * l);
        out[l] = bessel[l] * weight;
    }
    return out;
}

SeriesT hq_substituted(const LocalInstance& inst) {
    inst.validate();
    QScalar scale;
    switch (inst.rep.kind) {
        case Gl2Kind::RamifiedPSUnramAlpha:
            scale = QScalar(inst.q()) * inv(inst.omega_pi() * *inst.rep.alpha);
            break;
        case Gl2Kind::SteinbergUnramified:
            scale = QScalar::sqrt_q(inst.q()) * inv(inst.omega_pi() * *inst.rep.omega);
            break;
        default:
            throw UnsupportedCase("H/Q substitution is only defined for RamifiedPSUnramAlpha and SteinbergUnramified");
    }
    const PolyT h = sugano_H(inst.bessel, inst.q()).rescale(scale);
    const PolyT qpoly = sugano_Q(inst.satake).rescale(scale);
    return series_div(SeriesT::from_poly(h, inst.order), SeriesT::from_poly(qpoly, inst.order));
}

RatFnT lfactor_gsp4_gl2_case2(const SatakeParams& satake, const Gl2Local& rep) {
    require_kind(rep, Gl2Kind::RamifiedPSUnramAlpha, "lfactor_gsp4_gl2_case2");
    const QScalar q_half = QScalar::half_power(satake.q, -1);
    PolyT denom = PolyT::constant(1);
    for (const auto& g : satake.gamma) denom = denom * PolyT::one_minus(inv(g * *rep.alpha) * q_half);
    return RatFnT::inverse_of(std::move(denom));
}

RatFnT lfactor_chi_restriction(const SatakeParams& satake, const Gl2Local& rep) {
    const QScalar c = chi_at_varpi(satake, rep) * q_power(satake.q, -1);
    return RatFnT::inverse_of(PolyT({QScalar(1), QScalar(0), -c}));
}

RatFnT lfactor_triple_case2(const Gl2Local& rep, const BesselDatum& bessel, const SatakeParams& satake) {
    require_kind(rep, Gl2Kind::RamifiedPSUnramAlpha, "lfactor_triple_case2");
    bessel.validate();
    const std::int64_t q = satake.q;
    const QScalar omega_pi = satake.central_character();
    const QScalar c_alpha = inv(omega_pi * *rep.alpha);
    switch (bessel.legendre) {
        case Legendre::Inert: {
            const QScalar c = bessel.lambda_varpi * c_alpha * c_alpha * q_power(q, -2);
            return RatFnT::inverse_of(PolyT({QScalar(1), QScalar(0), -c}));
        }
        case Legendre::Ramified: {
            PolyT denom = linear_q1(*bessel.lambda_varpi_L * c_alpha, q);
            if (rep.beta_chi_unramified) {
                denom = denom * linear_q1(*bessel.lambda_varpi_L * inv(omega_pi * *rep.beta), q);
            }
            return RatFnT::inverse_of(std::move(denom));
        }
        case Legendre::Split:
            return RatFnT::inverse_of(linear_q1(*bessel.lambda_varpi_L * c_alpha, q) *
                                      linear_q1(*bessel.lambda_varpi_conj * c_alpha, q));
    }
    throw InvalidBesselDatum("unknown Legendre symbol");
}

RatFnT y_factor(const LocalInstance& inst, const VerifyOptions& options) {
    inst.validate();
    if (options.corrupt_y_table) return RatFnT{};
    const RatFnT l_chi = lfactor_chi_restriction(inst.satake, inst.rep);
    switch (inst.rep.kind) {
        case Gl2Kind::UnramifiedPS:
            return RatFnT{};
        case Gl2Kind::RamifiedPSUnramAlpha:
            if (inst.bessel.legendre == Legendre::Ramified && inst.rep.beta_chi_unramified) {
                const QScalar c = *inst.bessel.lambda_varpi_L * inv(inst.omega_pi() * *inst.rep.beta);
                return l_chi * RatFnT::inverse_of(linear_q1(c, inst.q()));
            }
            return l_chi;
        case Gl2Kind::SteinbergUnramified:
            return l_chi;
        case Gl2Kind::RamifiedOther:
            // No explicit ramified triple factor is available; it is taken as 1.
            return l_chi;
    }
    throw UnsupportedCase("unknown GL2 kind");
}

RatFnT zeta_closed_rhs(const LocalInstance& inst, const VerifyOptions& options) {
    inst.validate();
    const RatFnT l_chi = lfactor_chi_restriction(inst.satake, inst.rep);
    switch (inst.rep.kind) {
        case Gl2Kind::RamifiedOther:
            // L(3s+1/2, pi~ x tau~) = 1 and the triple factor is 1.
            return RatFnT{} / l_chi * y_factor(inst, options);
        case Gl2Kind::RamifiedPSUnramAlpha:
            return lfactor_gsp4_gl2_case2(inst.satake, inst.rep) /
                   (l_chi * lfactor_triple_case2(inst.rep, inst.bessel, inst.satake)) * y_factor(inst, options);
        default:
            throw UnsupportedCase("closed form is implemented for RamifiedOther and RamifiedPSUnramAlpha only, not " +
                                  std::string(to_string(inst.rep.kind)));
    }
}

VerificationReport verify_local(const LocalInstance& inst, const VerifyOptions& options) {
    VerificationReport report;
    report.instance = inst;
    report.lhs = zeta_series_lhs(inst);
    const Gl2Kind kind = inst.rep.kind;
    if (kind == Gl2Kind::RamifiedPSUnramAlpha || kind == Gl2Kind::SteinbergUnramified) {
        report.hq_series = hq_substituted(inst);
        report.lhs_vs_hq = series_equal(report.lhs, *report.hq_series);
    }
    if (kind == Gl2Kind::RamifiedPSUnramAlpha || kind == Gl2Kind::RamifiedOther) {
        report.rhs_series = ratfn_to_series(zeta_closed_rhs(inst, options), inst.order);
        report.lhs_vs_rhs = series_equal(report.lhs, *report.rhs_series);
    }
    report.pass = (!report.lhs_vs_hq || report.lhs_vs_hq->match) && (!report.lhs_vs_rhs || report.lhs_vs_rhs->match);
    return report;
}

PolyT unramified_triple_inverse(const SatakeParams& satake, const Gl2Local& rep, const BesselDatum& bessel) {
    require_kind(rep, Gl2Kind::UnramifiedPS, "unramified_triple_inverse");
    bessel.validate();
    const std::int64_t q = satake.q;
    const QScalar omega_pi = satake.central_character();
    // tau x chi|F^x = (alpha chi) x (beta chi) with values (omega_pi beta)^{-1}, (omega_pi alpha)^{-1}.
    const QScalar params[2] = {inv(omega_pi * *rep.alpha), inv(omega_pi * *rep.beta)};
    PolyT out = PolyT::constant(1);
    for (const auto& c : params) {
        switch (bessel.legendre) {
            case Legendre::Inert:
                // AI(Lambda) has parameters +-sqrt(Lambda(varpi)); pairing them avoids the root.
                out = out * PolyT({QScalar(1), QScalar(0), -(bessel.lambda_varpi * c * c * q_power(q, -2))});
                break;
            case Legendre::Ramified:
                out = out * linear_q1(*bessel.lambda_varpi_L * c, q);
                break;
            case Legendre::Split:
                out = out * linear_q1(*bessel.lambda_varpi_L * c, q) * linear_q1(*bessel.lambda_varpi_conj * c, q);
                break;
        }
    }
    return out;
}

RatFnT unramified_closed(const SatakeParams& satake, const Gl2Local& rep, const BesselDatum& bessel) {
    require_kind(rep, Gl2Kind::UnramifiedPS, "unramified_closed");
    satake.validate();
    const QScalar q_half = QScalar::half_power(satake.q, -1);
    PolyT l_denom = PolyT::constant(1);
    for (const auto& g : satake.gamma) {
        for (const auto& t : {*rep.alpha, *rep.beta}) l_denom = l_denom * PolyT::one_minus(inv(g * t) * q_half);
    }
    const RatFnT l_pi_tau = RatFnT::inverse_of(std::move(l_denom));
    const RatFnT l_chi = lfactor_chi_restriction(satake, rep);
    const RatFnT l_triple = RatFnT::inverse_of(unramified_triple_inverse(satake, rep, bessel));
    return l_pi_tau / (l_chi * l_triple);
}

}  // namespace gspzeta
