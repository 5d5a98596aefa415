#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gspzeta/qscalar.hpp"

namespace gspzeta {

/// Which newform formula applies to the local GL2 representation tau.
enum class Gl2Kind {
    UnramifiedPS,          // alpha x beta, both unramified
    RamifiedPSUnramAlpha,  // alpha x beta, alpha unramified, beta ramified
    SteinbergUnramified,   // Omega St, Omega unramified
    RamifiedOther,         // supercuspidal, ramified Steinberg twist, doubly ramified PS
};

std::string_view to_string(Gl2Kind kind);
Gl2Kind parse_gl2_kind(std::string_view text);

/// Local GL2 datum. Use the named constructors; they derive omega_tau and the
/// conductor exponent where those are determined by the kind.
struct Gl2Local {
    Gl2Kind kind = Gl2Kind::UnramifiedPS;
    std::optional<QScalar> alpha;  // alpha(varpi)
    std::optional<QScalar> beta;   // beta(varpi), also for a ramified beta
    std::optional<QScalar> omega;  // Omega(varpi)
    QScalar omega_tau{1};          // central character at varpi
    int conductor_exp = 0;
    // Only meaningful when the Bessel datum is ramified (Legendre symbol 0).
    bool beta_chi_unramified = false;
    std::int64_t q = 0;  // residue cardinality

    static Gl2Local unramified_ps(std::int64_t q, QScalar alpha, QScalar beta);
    static Gl2Local ramified_ps(std::int64_t q, QScalar alpha, QScalar beta, int conductor_exp,
                                bool beta_chi_unramified);
    static Gl2Local steinberg(std::int64_t q, QScalar omega);
    static Gl2Local ramified_other(std::int64_t q, QScalar omega_tau, int conductor_exp);

    /// Re-checks the per-kind field requirements and derived values.
    void validate() const;
};

/// Newform Whittaker value W^(0)(diag(varpi^l, 1)), normalized W^(0)(1) = 1.
QScalar newform_value(const Gl2Local& rep, std::int64_t l);

/// dim V_tau(r) for a representation of conductor exponent n.
std::int64_t newform_space_dim(std::int64_t n, std::int64_t r);
/// Dimension of the K^H Gamma(P^r)-invariants in the induced representation.
std::int64_t induced_invariant_dim(std::int64_t n, std::int64_t r);

}  // namespace gspzeta
