#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gspzeta/qscalar.hpp"

namespace gspzeta {

/// Truncation order used by every identity check unless configured otherwise.
inline constexpr int kDefaultOrder = 12;

/// Polynomial over QScalar in one formal variable. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class PolyT {
public:
    PolyT() = default;
    explicit PolyT(std::vector<QScalar> coeffs);

    static PolyT constant(QScalar c) { return PolyT({std::move(c)}); }
    /// 1 - c*T
    static PolyT one_minus(const QScalar& c) { return PolyT({QScalar(1), -c}); }

    const std::vector<QScalar>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    QScalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QScalar(0); }

    QScalar evaluate(const QScalar& x) const;
    /// p(c*T)
    PolyT rescale(const QScalar& c) const;

    PolyT& operator+=(const PolyT& rhs);
    PolyT& operator-=(const PolyT& rhs);
    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator*(const PolyT& a, const PolyT& b);
    friend PolyT operator*(const QScalar& c, const PolyT& p);
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<QScalar> coeffs_;
};

/// Power series truncated at T^order; holds order + 1 coefficients.
class SeriesT {
public:
    explicit SeriesT(int order);
    SeriesT(std::vector<QScalar> coeffs, int order);
    static SeriesT from_poly(const PolyT& p, int order);

    int order() const noexcept { return order_; }
    const std::vector<QScalar>& coeffs() const noexcept { return coeffs_; }
    const QScalar& operator[](std::size_t k) const { return coeffs_.at(k); }
    QScalar& operator[](std::size_t k) { return coeffs_.at(k); }

    // Binary results carry the smaller of the two orders.
    friend SeriesT operator+(const SeriesT& a, const SeriesT& b);
    friend SeriesT operator-(const SeriesT& a, const SeriesT& b);
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b);
    friend bool operator==(const SeriesT& a, const SeriesT& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<QScalar> coeffs_;
    int order_;
};

/// numer / denom with denom(0) == 1. Not required to be reduced.
class RatFnT {
public:
    RatFnT() : numer_(PolyT::constant(1)), denom_(PolyT::constant(1)) {}
    /// Scales both sides so that denom(0) == 1; throws DivisionByNonUnit when
    /// denom(0) is not invertible.
    RatFnT(PolyT numer, PolyT denom);
    static RatFnT polynomial(PolyT p) { return RatFnT(std::move(p), PolyT::constant(1)); }
    static RatFnT inverse_of(PolyT p) { return RatFnT(PolyT::constant(1), std::move(p)); }

    const PolyT& numer() const noexcept { return numer_; }
    const PolyT& denom() const noexcept { return denom_; }

    RatFnT inverse() const { return RatFnT(denom_, numer_); }
    QScalar evaluate(const QScalar& t) const;

    friend RatFnT operator*(const RatFnT& a, const RatFnT& b) {
        return RatFnT(a.numer_ * b.numer_, a.denom_ * b.denom_);
    }
    friend RatFnT operator/(const RatFnT& a, const RatFnT& b) { return a * b.inverse(); }

private:
    PolyT numer_;
    PolyT denom_;
};

struct SeriesComparison {
    bool match = true;
    int compared_through = 0;
    std::optional<std::size_t> first_mismatch;
    QScalar lhs_coeff;
    QScalar rhs_coeff;
};

/// The unique s with s * den == num through min(order); den[0] must be a unit.
SeriesT series_div(const SeriesT& num, const SeriesT& den);
SeriesT ratfn_to_series(const RatFnT& f, int order);
/// Compares coefficients 0..min(order), reporting the first mismatch.
SeriesComparison series_equal(const SeriesT& a, const SeriesT& b);

}  // namespace gspzeta
