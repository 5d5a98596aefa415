#include "gspzeta/gl2.hpp"

#include <string>

#include "gspzeta/errors.hpp"

namespace gspzeta {

std::string_view to_string(Gl2Kind kind) {
    switch (kind) {
        case Gl2Kind::UnramifiedPS: return "UnramifiedPS";
        case Gl2Kind::RamifiedPSUnramAlpha: return "RamifiedPSUnramAlpha";
        case Gl2Kind::SteinbergUnramified: return "SteinbergUnramified";
        case Gl2Kind::RamifiedOther: return "RamifiedOther";
    }
    return "?";
}

Gl2Kind parse_gl2_kind(std::string_view text) {
    for (auto k : {Gl2Kind::UnramifiedPS, Gl2Kind::RamifiedPSUnramAlpha, Gl2Kind::SteinbergUnramified,
                   Gl2Kind::RamifiedOther}) {
        if (to_string(k) == text) return k;
    }
    throw InvalidArgument("unknown GL2 kind '" + std::string(text) + "'");
}

Gl2Local Gl2Local::unramified_ps(std::int64_t q, QScalar alpha, QScalar beta) {
    Gl2Local rep;
    rep.q = q;
    rep.kind = Gl2Kind::UnramifiedPS;
    rep.omega_tau = alpha * beta;
    rep.alpha = std::move(alpha);
    rep.beta = std::move(beta);
    rep.conductor_exp = 0;
    rep.validate();
    return rep;
}

Gl2Local Gl2Local::ramified_ps(std::int64_t q, QScalar alpha, QScalar beta, int conductor_exp,
                               bool beta_chi_unramified) {
    Gl2Local rep;
    rep.q = q;
    rep.kind = Gl2Kind::RamifiedPSUnramAlpha;
    rep.omega_tau = alpha * beta;
    rep.alpha = std::move(alpha);
    rep.beta = std::move(beta);
    rep.conductor_exp = conductor_exp;
    rep.beta_chi_unramified = beta_chi_unramified;
    rep.validate();
    return rep;
}

Gl2Local Gl2Local::steinberg(std::int64_t q, QScalar omega) {
    Gl2Local rep;
    rep.q = q;
    rep.kind = Gl2Kind::SteinbergUnramified;
    rep.omega_tau = omega * omega;
    rep.omega = std::move(omega);
    rep.conductor_exp = 1;
    rep.validate();
    return rep;
}

Gl2Local Gl2Local::ramified_other(std::int64_t q, QScalar omega_tau, int conductor_exp) {
    Gl2Local rep;
    rep.q = q;
    rep.kind = Gl2Kind::RamifiedOther;
    rep.omega_tau = std::move(omega_tau);
    rep.conductor_exp = conductor_exp;
    rep.validate();
    return rep;
}

void Gl2Local::validate() const {
    auto require = [](const std::optional<QScalar>& v, const char* name) {
        if (!v) throw InvalidArgument(std::string("GL2 datum is missing ") + name);
        if (!v->is_invertible()) throw InvalidArgument(std::string("GL2 character value ") + name + " is not invertible");
    };
    if (q < 2) throw InvalidArgument("GL2 datum needs q >= 2");
    if (!omega_tau.is_invertible()) throw InvalidArgument("omega_tau(varpi) is not invertible");
    switch (kind) {
        case Gl2Kind::UnramifiedPS:
        case Gl2Kind::RamifiedPSUnramAlpha:
            require(alpha, "alpha");
            require(beta, "beta");
            if (omega_tau != *alpha * *beta) throw InvalidArgument("omega_tau must equal alpha*beta");
            if (kind == Gl2Kind::UnramifiedPS && conductor_exp != 0) {
                throw InvalidArgument("unramified principal series has conductor exponent 0");
            }
            if (kind == Gl2Kind::RamifiedPSUnramAlpha && conductor_exp < 1) {
                throw InvalidArgument("ramified principal series needs conductor exponent >= 1");
            }
            return;
        case Gl2Kind::SteinbergUnramified:
            require(omega, "omega");
            if (omega_tau != *omega * *omega) throw InvalidArgument("omega_tau must equal Omega^2");
            if (conductor_exp != 1) throw InvalidArgument("unramified Steinberg twist has conductor exponent 1");
            return;
        case Gl2Kind::RamifiedOther:
            if (conductor_exp < 1) throw InvalidArgument("ramified representation needs conductor exponent >= 1");
            return;
    }
}

QScalar newform_value(const Gl2Local& rep, std::int64_t l) {
    if (l < 0) return QScalar(0);
    switch (rep.kind) {
        case Gl2Kind::RamifiedOther:
            return l == 0 ? QScalar(1) : QScalar(0);
        case Gl2Kind::RamifiedPSUnramAlpha:
            // Uses the parameter of the ramified character beta.
            return qscalar_pow(*rep.beta * QScalar::half_power(rep.q, -1), l);
        case Gl2Kind::SteinbergUnramified:
            return qscalar_pow(*rep.omega / QScalar(rep.q), l);
        case Gl2Kind::UnramifiedPS:
            break;
    }
    QScalar sum(0);
    for (std::int64_t k = 0; k <= l; ++k) sum += qscalar_pow(*rep.alpha, k) * qscalar_pow(*rep.beta, l - k);
    return QScalar::half_power(rep.q, -l) * sum;
}

std::int64_t newform_space_dim(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0) throw InvalidArgument("dimension formulas need n, r >= 0");
    return r >= n ? r - n + 1 : 0;
}

std::int64_t induced_invariant_dim(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0) throw InvalidArgument("dimension formulas need n, r >= 0");
    return r >= n ? (r - n + 1) * (r - n + 2) / 2 : 0;
}

}  // namespace gspzeta
