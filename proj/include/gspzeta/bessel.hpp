#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "gspzeta/qscalar.hpp"
#include "gspzeta/series.hpp"

namespace gspzeta {

/// Satake parameters gamma^(1..4)(varpi) of an unramified GSp4 representation.
struct SatakeParams {
    std::array<QScalar, 4> gamma;
    std::int64_t q = 0;

    /// gamma1 * gamma3 (== gamma2 * gamma4), the central character at varpi.
    QScalar central_character() const { return gamma[0] * gamma[2]; }
    /// Throws InvalidArgument if the pairing constraint or invertibility fails.
    void validate() const;
};

/// Splitting behaviour of the quadratic extension L/F.
enum class Legendre : int { Inert = -1, Ramified = 0, Split = 1 };

/// Unramified Bessel character data. lambda_varpi_L is used for the ramified
/// and split cases, lambda_varpi_conj (Lambda(varpi varpi_L^-1)) for split only.
struct BesselDatum {
    Legendre legendre = Legendre::Inert;
    std::optional<QScalar> lambda_varpi_L;
    std::optional<QScalar> lambda_varpi_conj;
    QScalar lambda_varpi;

    /// Throws InvalidBesselDatum on missing fields or a broken norm relation.
    void validate() const;
};

/// H(y) of the Sugano generating function; polynomial in y.
PolyT sugano_H(const BesselDatum& d, std::int64_t q);
/// Q(y) = prod_i (1 - gamma_i q^{-3/2} y), degree exactly 4.
PolyT sugano_Q(const SatakeParams& p);
/// B(h(l,0)) for l = 0..order as the coefficients of H(y)/Q(y).
SeriesT bessel_coeffs(const SatakeParams& p, const BesselDatum& d, int order);

}  // namespace gspzeta
