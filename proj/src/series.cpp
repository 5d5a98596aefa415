#include "gspzeta/series.hpp"

#include <algorithm>
#include <string>

#include "gspzeta/errors.hpp"

namespace gspzeta {

PolyT::PolyT(std::vector<QScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PolyT::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QScalar PolyT::evaluate(const QScalar& x) const {
    QScalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyT PolyT::rescale(const QScalar& c) const {
    std::vector<QScalar> out;
    out.reserve(coeffs_.size());
    QScalar power(1);
    for (const auto& a : coeffs_) {
        out.push_back(a * power);
        power *= c;
    }
    return PolyT(std::move(out));
}

PolyT& PolyT::operator+=(const PolyT& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

PolyT& PolyT::operator-=(const PolyT& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyT(std::move(out));
}

PolyT operator*(const QScalar& c, const PolyT& p) { return PolyT::constant(c) * p; }

SeriesT::SeriesT(int order) : order_(order) {
    if (order < 0) throw InvalidArgument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesT::SeriesT(std::vector<QScalar> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 0) throw InvalidArgument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesT SeriesT::from_poly(const PolyT& p, int order) {
    SeriesT s(order);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) s.coeffs_[k] = p.coeff(k);
    return s;
}

SeriesT operator+(const SeriesT& a, const SeriesT& b) {
    SeriesT out(std::min(a.order_, b.order_));
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

SeriesT operator-(const SeriesT& a, const SeriesT& b) {
    SeriesT out(std::min(a.order_, b.order_));
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
}

SeriesT operator*(const SeriesT& a, const SeriesT& b) {
    SeriesT out(std::min(a.order_, b.order_));
    const std::size_t n = out.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

RatFnT::RatFnT(PolyT numer, PolyT denom) : numer_(std::move(numer)), denom_(std::move(denom)) {
    const QScalar c = denom_.coeff(0);
    if (!c.is_invertible()) {
        throw DivisionByNonUnit("rational function denominator has non-unit constant term " + c.to_string());
    }
    if (!c.is_one()) {
        const QScalar inv = c.inverse();
        numer_ = inv * numer_;
        denom_ = inv * denom_;
    }
}

QScalar RatFnT::evaluate(const QScalar& t) const { return numer_.evaluate(t) / denom_.evaluate(t); }

SeriesT series_div(const SeriesT& num, const SeriesT& den) {
    const QScalar& lead = den[0];
    if (!lead.is_invertible()) {
        throw DivisionByNonUnit("series constant term " + lead.to_string() + " is not a unit");
    }
    const QScalar lead_inv = lead.inverse();
    SeriesT out(std::min(num.order(), den.order()));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(out.order()); ++k) {
        QScalar acc = num[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * out[k - j];
        out[k] = acc * lead_inv;
    }
    return out;
}

SeriesT ratfn_to_series(const RatFnT& f, int order) {
    return series_div(SeriesT::from_poly(f.numer(), order), SeriesT::from_poly(f.denom(), order));
}

SeriesComparison series_equal(const SeriesT& a, const SeriesT& b) {
    SeriesComparison report;
    report.compared_through = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= static_cast<std::size_t>(report.compared_through); ++k) {
        if (a[k] != b[k]) {
            report.match = false;
            report.first_mismatch = k;
            report.lhs_coeff = a[k];
            report.rhs_coeff = b[k];
            break;
        }
    }
    return report;
}

}  // namespace gspzeta
