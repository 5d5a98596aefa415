#pragma once

#include <optional>

#include "gspzeta/bessel.hpp"
#include "gspzeta/gl2.hpp"
#include "gspzeta/series.hpp"

namespace gspzeta {

// Everything in this module is expressed in the formal variable T = q^{-3s}.

/// Unramified GSp4 data, Bessel character and local GL2 representation at one
/// non-archimedean place.
struct LocalInstance {
    SatakeParams satake;
    BesselDatum bessel;
    Gl2Local rep;
    int order = kDefaultOrder;

    std::int64_t q() const noexcept { return satake.q; }
    QScalar omega_pi() const { return satake.central_character(); }
    /// Component checks plus the shared q and Lambda(varpi) == omega_pi(varpi).
    void validate() const;
};

struct VerifyOptions {
    // Negative-control hook: replaces Y(s) by 1 in the closed form.
    bool corrupt_y_table = false;
};

struct VerificationReport {
    LocalInstance instance;
    SeriesT lhs{0};
    std::optional<SeriesT> hq_series;
    std::optional<SeriesT> rhs_series;
    std::optional<SeriesComparison> lhs_vs_hq;
    std::optional<SeriesComparison> lhs_vs_rhs;
    bool pass = false;
};

/// Raw zeta sum  sum_l B(h(l,0)) W#(eta h(l,0)) q^{3l}  truncated at inst.order.
SeriesT zeta_series_lhs(const LocalInstance& inst);
/// H(y)/Q(y) after y -> c*T (Cases 2 and 3 only).
SeriesT hq_substituted(const LocalInstance& inst);

/// L(3s+1/2, pi~ x tau~) for tau = alpha x beta with ramified beta.
RatFnT lfactor_gsp4_gl2_case2(const SatakeParams& satake, const Gl2Local& rep);
/// L(6s+1, chi|F^x) with chi(varpi) = (omega_pi omega_tau)^{-1}(varpi).
RatFnT lfactor_chi_restriction(const SatakeParams& satake, const Gl2Local& rep);
/// L(3s+1, tau x AI(Lambda) x chi|F^x) for the ramified principal series.
RatFnT lfactor_triple_case2(const Gl2Local& rep, const BesselDatum& bessel, const SatakeParams& satake);
/// Correction factor Y(s) of the local main identity.
RatFnT y_factor(const LocalInstance& inst, const VerifyOptions& options = {});
/// The L-factor quotient times Y(s) (Cases 1 and 2).
RatFnT zeta_closed_rhs(const LocalInstance& inst, const VerifyOptions& options = {});

/// Runs every applicable comparison for a ramified tau.
VerificationReport verify_local(const LocalInstance& inst, const VerifyOptions& options = {});

/// Inverse of the unramified triple factor L(3s+1, tau x AI(Lambda) x chi|F^x).
PolyT unramified_triple_inverse(const SatakeParams& satake, const Gl2Local& rep, const BesselDatum& bessel);
/// Closed form of the fully unramified zeta integral (no series check exists).
RatFnT unramified_closed(const SatakeParams& satake, const Gl2Local& rep, const BesselDatum& bessel);

}  // namespace gspzeta
