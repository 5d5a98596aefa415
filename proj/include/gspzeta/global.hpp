#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gspzeta/gamma.hpp"
#include "gspzeta/qscalar.hpp"
#include "gspzeta/zeta_local.hpp"

namespace gspzeta {

/// One ideal class: Lambda(t_j) and the Fourier coefficient a(S_j, Phi).
struct ClassDatum {
    Complex lambda_t{1.0, 0.0};
    Complex fourier{0.0, 0.0};
};

/// a(Lambda) = sum_j Lambda(t_j) a(S_j, Phi).
Complex a_lambda(const std::vector<ClassDatum>& classes);

/// A bad prime with its Y_p at the special point. When the value is known
/// exactly it is kept as a QScalar and floated only at the end.
struct BadPrime {
    std::int64_t p = 0;
    std::optional<Complex> y_value;
    std::optional<QScalar> y_exact;

    Complex value() const;
};

struct GlobalSpec {
    int l = 0;
    int D = 0;
    Complex a_lambda{1.0, 0.0};
    std::vector<BadPrime> bad_primes;

    static GlobalSpec make(int l, int D, Complex a_lambda, std::vector<BadPrime> bad_primes);
    void validate() const;
};

/// conj(a) pi D^{-3s-l/2} (4pi)^{-3s+3/2-3l/2} Gamma(3s+3l/2-3/2) / (6s+l-1).
Complex y_infty(Complex s, const GlobalSpec& spec);

struct SpecialValueConstant {
    Rational mantissa;        // D^{1-l} 2^{6-4l} (2l-5)!, exact
    int sqrt_factor = 0;      // the remaining sqrt(D)
    Complex bad_prime_product{1.0, 0.0};
    Complex value;

    std::string mantissa_text() const { return mantissa.get_str(); }
};

/// C = conj(a) D^{-l+3/2} 2^{-4l+6} (2l-5)! prod_p Y_p.
SpecialValueConstant special_value_constant(const GlobalSpec& spec);

/// Y(s) of a local instance evaluated at s = l/6 - 1/2, i.e. T = q^{3/2 - l/2}.
QScalar local_y_at_special_point(const LocalInstance& inst, int l);

}  // namespace gspzeta
