#include "gspzeta/qscalar.hpp"

#include <cmath>
#include <sstream>

#include "gspzeta/errors.hpp"

namespace gspzeta {

QScalar::QScalar(Rational rat, Rational sqrt, std::int64_t q)
    : rat_(std::move(rat)), sqrt_(std::move(sqrt)), q_(q) {
    rat_.canonicalize();
    sqrt_.canonicalize();
    if (q_ != 0 && q_ < 2) {
        throw InvalidArgument("residue cardinality q must be >= 2, got " + std::to_string(q_));
    }
    if (q_ == 0 && sgn(sqrt_) != 0) {
        throw InvalidArgument("nonzero sqrt part requires an ambient q");
    }
}

QScalar QScalar::sqrt_q(std::int64_t q) { return QScalar(0, 1, q); }

QScalar QScalar::half_power(std::int64_t q, std::int64_t k) {
    return qscalar_pow(sqrt_q(q), k);
}

Rational QScalar::parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || sgn(r.get_den()) == 0) {
        throw InvalidArgument("not a rational literal: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::int64_t QScalar::adopt_q(const QScalar& rhs) const {
    if (q_ == 0) return rhs.q_;
    if (rhs.q_ == 0 || rhs.q_ == q_) return q_;
    throw InvalidArgument("QScalar operands over different q (" + std::to_string(q_) + " vs " +
                          std::to_string(rhs.q_) + ")");
}

Rational QScalar::norm() const {
    Rational n = rat_ * rat_ - Rational(q_) * sqrt_ * sqrt_;
    return n;
}

QScalar QScalar::conjugate() const {
    QScalar out = *this;
    out.sqrt_ = -out.sqrt_;
    return out;
}

QScalar QScalar::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) {
        throw InvalidInversion("element " + to_string() + " has zero norm");
    }
    QScalar out = conjugate();
    out.rat_ /= n;
    out.sqrt_ /= n;
    return out;
}

double QScalar::to_double() const {
    double v = rat_.get_d();
    if (sgn(sqrt_) != 0) v += sqrt_.get_d() * std::sqrt(static_cast<double>(q_));
    return v;
}

std::string QScalar::to_string() const {
    std::ostringstream os;
    os << rat_.get_str();
    if (sgn(sqrt_) != 0) os << (sgn(sqrt_) > 0 ? "+" : "") << sqrt_.get_str() << "*sqrt(" << q_ << ")";
    return os.str();
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
    q_ = adopt_q(rhs);
    rat_ += rhs.rat_;
    sqrt_ += rhs.sqrt_;
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) {
    q_ = adopt_q(rhs);
    rat_ -= rhs.rat_;
    sqrt_ -= rhs.sqrt_;
    return *this;
}

QScalar& QScalar::operator*=(const QScalar& rhs) {
    const std::int64_t q = adopt_q(rhs);
    // (a + b r)(c + d r) = (ac + bd q) + (ad + bc) r
    Rational rat = rat_ * rhs.rat_ + Rational(q) * sqrt_ * rhs.sqrt_;
    Rational sqrt = rat_ * rhs.sqrt_ + sqrt_ * rhs.rat_;
    rat_ = std::move(rat);
    sqrt_ = std::move(sqrt);
    q_ = q;
    return *this;
}

QScalar QScalar::operator-() const {
    QScalar out = *this;
    out.rat_ = -out.rat_;
    out.sqrt_ = -out.sqrt_;
    return out;
}

bool operator==(const QScalar& a, const QScalar& b) {
    if (a.q_ != 0 && b.q_ != 0 && a.q_ != b.q_ && (sgn(a.sqrt_) != 0 || sgn(b.sqrt_) != 0)) {
        throw InvalidArgument("comparing QScalars over different q");
    }
    return a.rat_ == b.rat_ && a.sqrt_ == b.sqrt_;
}

QScalar qscalar_pow(const QScalar& x, std::int64_t k) {
    QScalar base = k < 0 ? x.inverse() : x;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    QScalar result(1);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

}  // namespace gspzeta
