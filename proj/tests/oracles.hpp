#pragma once

// Reference computations for the test suites. They share no code paths with
// the library beyond the QScalar ring operations.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "gspzeta/bessel.hpp"
#include "gspzeta/gl2.hpp"
#include "gspzeta/qscalar.hpp"
#include "gspzeta/zeta_local.hpp"

namespace oracle {

using gspzeta::QScalar;
using gspzeta::Rational;

inline QScalar power(const QScalar& x, int k) {
    QScalar r(1);
    if (k >= 0) {
        for (int i = 0; i < k; ++i) r *= x;
    } else {
        const QScalar inv = QScalar(1) / x;
        for (int i = 0; i < -k; ++i) r *= inv;
    }
    return r;
}

// q^{k/2} built from the formal generator one factor at a time.
inline QScalar sqrt_q_power(std::int64_t q, int k) { return power(QScalar(0, 1, q), k); }

// Complete homogeneous symmetric polynomial h_m(a_1..a_4) by summing over all
// multi-indices k_1 + ... + k_4 = m.
inline QScalar complete_homogeneous(const std::vector<QScalar>& a, int m) {
    QScalar total(0);
    for (int k1 = 0; k1 <= m; ++k1)
        for (int k2 = 0; k1 + k2 <= m; ++k2)
            for (int k3 = 0; k1 + k2 + k3 <= m; ++k3) {
                const int k4 = m - k1 - k2 - k3;
                total += power(a[0], k1) * power(a[1], k2) * power(a[2], k3) * power(a[3], k4);
            }
    return total;
}

// H(y) written out case by case.
inline std::vector<QScalar> h_poly(const gspzeta::BesselDatum& d, std::int64_t q) {
    const QScalar q2 = QScalar(Rational(1, q * q));
    switch (d.legendre) {
        case gspzeta::Legendre::Inert: return {QScalar(1), QScalar(0), -(q2 * q2 * d.lambda_varpi)};
        case gspzeta::Legendre::Ramified: return {QScalar(1), -(q2 * *d.lambda_varpi_L)};
        case gspzeta::Legendre::Split:
            return {QScalar(1), -(q2 * (*d.lambda_varpi_L + *d.lambda_varpi_conj)), q2 * q2 * d.lambda_varpi};
    }
    return {};
}

// B(h(l,0)) for l = 0..order: sum_j H_j h_{l-j}(gamma_i q^{-3/2}).
inline std::vector<QScalar> bessel_brute(const gspzeta::SatakeParams& s, const gspzeta::BesselDatum& d, int order) {
    std::vector<QScalar> a;
    const QScalar scale = sqrt_q_power(s.q, -3);
    for (const auto& g : s.gamma) a.push_back(g * scale);
    const auto H = h_poly(d, s.q);
    std::vector<QScalar> out;
    for (int l = 0; l <= order; ++l) {
        QScalar b(0);
        for (int j = 0; j < static_cast<int>(H.size()) && j <= l; ++j) b += H[j] * complete_homogeneous(a, l - j);
        out.push_back(b);
    }
    return out;
}

// Newform values from the four explicit formulas.
inline QScalar newform(const gspzeta::Gl2Local& rep, int l) {
    if (l < 0) return QScalar(0);
    const std::int64_t q = rep.q;
    switch (rep.kind) {
        case gspzeta::Gl2Kind::RamifiedOther: return QScalar(l == 0 ? 1 : 0);
        case gspzeta::Gl2Kind::RamifiedPSUnramAlpha: return power(*rep.beta, l) * sqrt_q_power(q, -l);
        case gspzeta::Gl2Kind::SteinbergUnramified: return power(*rep.omega, l) * power(QScalar(q), -l);
        case gspzeta::Gl2Kind::UnramifiedPS: {
            QScalar sum(0);
            for (int k = 0; k <= l; ++k) sum += power(*rep.alpha, k) * power(*rep.beta, l - k);
            return sum * sqrt_q_power(q, -l);
        }
    }
    return QScalar(0);
}

// Zeta sum coefficients computed directly from the brute-force Bessel values.
inline std::vector<QScalar> zeta_lhs(const gspzeta::LocalInstance& inst) {
    const auto b = bessel_brute(inst.satake, inst.bessel, inst.order);
    const QScalar omega = inst.satake.gamma[0] * inst.satake.gamma[2] * inst.rep.omega_tau;
    std::vector<QScalar> out;
    for (int l = 0; l <= inst.order; ++l) {
        out.push_back(b[l] * power(omega, -l) * sqrt_q_power(inst.q(), -3 * l) * newform(inst.rep, l) *
                      sqrt_q_power(inst.q(), 6 * l));
    }
    return out;
}

// Value of x when q is a perfect square and sqrt(q) is replaced by its root.
inline Rational specialize_square(const QScalar& x) {
    const auto root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(x.q() ? x.q() : 1))));
    return x.rat_part() + x.sqrt_part() * root;
}

// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// K_0(z) = int_0^inf exp(-z cosh t) dt.
inline double bessel_k0(double z) {
    return simpson([z](double t) { return std::exp(-z * std::cosh(t)); }, 0.0, 12.0, 24000);
}

}  // namespace oracle
