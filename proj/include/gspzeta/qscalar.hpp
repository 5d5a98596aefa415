#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace gspzeta {

using Rational = mpq_class;

/// Exact element rat + sqrt * sqrt(q) of Q[x]/(x^2 - q).
///
/// sqrt(q) is a formal symbol: no simplification happens when q is a perfect
/// square. A value with zero sqrt part may carry q == 0, meaning it lives in
/// Q and combines with elements of any ring; mixing two different nonzero q
/// throws InvalidArgument.
class QScalar {
public:
    QScalar() = default;
    QScalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
    QScalar(Rational value) : rat_(std::move(value)) { rat_.canonicalize(); }  // NOLINT
    QScalar(Rational rat, Rational sqrt, std::int64_t q);

    /// The generator sqrt(q) itself.
    static QScalar sqrt_q(std::int64_t q);
    /// q^(k/2) for any integer k.
    static QScalar half_power(std::int64_t q, std::int64_t k);
    /// Parses "p", "p/r" (rational only).
    static Rational parse_rational(const std::string& text);

    const Rational& rat_part() const noexcept { return rat_; }
    const Rational& sqrt_part() const noexcept { return sqrt_; }
    std::int64_t q() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(rat_) == 0 && sgn(sqrt_) == 0; }
    bool is_one() const noexcept { return rat_ == 1 && sgn(sqrt_) == 0; }
    bool is_rational() const noexcept { return sgn(sqrt_) == 0; }

    /// rat^2 - q * sqrt^2.
    Rational norm() const;
    /// rat - sqrt * sqrt(q).
    QScalar conjugate() const;
    bool is_invertible() const { return sgn(norm()) != 0; }
    QScalar inverse() const;

    double to_double() const;
    std::string to_string() const;

    QScalar& operator+=(const QScalar& rhs);
    QScalar& operator-=(const QScalar& rhs);
    QScalar& operator*=(const QScalar& rhs);
    QScalar& operator/=(const QScalar& rhs) { return *this *= rhs.inverse(); }

    friend QScalar operator+(QScalar lhs, const QScalar& rhs) { return lhs += rhs; }
    friend QScalar operator-(QScalar lhs, const QScalar& rhs) { return lhs -= rhs; }
    friend QScalar operator*(QScalar lhs, const QScalar& rhs) { return lhs *= rhs; }
    friend QScalar operator/(QScalar lhs, const QScalar& rhs) { return lhs /= rhs; }
    QScalar operator-() const;

    friend bool operator==(const QScalar& a, const QScalar& b);
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const QScalar& x) {
        return os << x.to_string();
    }

private:
    std::int64_t adopt_q(const QScalar& rhs) const;

    Rational rat_{0};
    Rational sqrt_{0};
    std::int64_t q_ = 0;
};

/// x^k by repeated squaring; x^0 = 1. Negative k requires x invertible.
QScalar qscalar_pow(const QScalar& x, std::int64_t k);

}  // namespace gspzeta
