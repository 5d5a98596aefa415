#include "gspzeta/bessel.hpp"

#include "gspzeta/errors.hpp"

namespace gspzeta {

void SatakeParams::validate() const {
    if (q < 2) throw InvalidArgument("Satake parameters need q >= 2");
    for (const auto& g : gamma) {
        if (!g.is_invertible()) throw InvalidArgument("Satake parameter " + g.to_string() + " is not invertible");
    }
    if (gamma[0] * gamma[2] != gamma[1] * gamma[3]) {
        throw InvalidArgument("Satake parameters violate gamma1*gamma3 == gamma2*gamma4");
    }
}

void BesselDatum::validate() const {
    if (!lambda_varpi.is_invertible()) throw InvalidBesselDatum("Lambda(varpi) must be invertible");
    switch (legendre) {
        case Legendre::Inert:
            return;
        case Legendre::Ramified:
            if (!lambda_varpi_L) throw InvalidBesselDatum("ramified case needs Lambda(varpi_L)");
            if (*lambda_varpi_L * *lambda_varpi_L != lambda_varpi) {
                throw InvalidBesselDatum("ramified case needs Lambda(varpi) == Lambda(varpi_L)^2");
            }
            return;
        case Legendre::Split:
            if (!lambda_varpi_L || !lambda_varpi_conj) {
                throw InvalidBesselDatum("split case needs Lambda(varpi_L) and Lambda(varpi varpi_L^-1)");
            }
            if (*lambda_varpi_L * *lambda_varpi_conj != lambda_varpi) {
                throw InvalidBesselDatum("split case needs Lambda(varpi) == Lambda(varpi_L) Lambda(varpi varpi_L^-1)");
            }
            return;
    }
    throw InvalidBesselDatum("unknown Legendre symbol");
}

PolyT sugano_H(const BesselDatum& d, std::int64_t q) {
    d.validate();
    const QScalar q_m2 = qscalar_pow(QScalar(q), -2);
    const QScalar q_m4 = qscalar_pow(QScalar(q), -4);
    switch (d.legendre) {
        case Legendre::Inert:
            return PolyT({QScalar(1), QScalar(0), -(q_m4 * d.lambda_varpi)});
        case Legendre::Ramified:
            return PolyT({QScalar(1), -(q_m2 * *d.lambda_varpi_L)});
        case Legendre::Split:
            return PolyT({QScalar(1), -(q_m2 * (*d.lambda_varpi_L + *d.lambda_varpi_conj)),
                          q_m4 * d.lambda_varpi});
    }
    throw InvalidBesselDatum("unknown Legendre symbol");
}

PolyT sugano_Q(const SatakeParams& p) {
    const QScalar scale = QScalar::half_power(p.q, -3);
    PolyT out = PolyT::constant(1);
    for (const auto& g : p.gamma) out = out * PolyT::one_minus(g * scale);
    return out;
}

SeriesT bessel_coeffs(const SatakeParams& p, const BesselDatum& d, int order) {
    p.validate();
    return series_div(SeriesT::from_poly(sugano_H(d, p.q), order), SeriesT::from_poly(sugano_Q(p), order));
}

}  // namespace gspzeta
