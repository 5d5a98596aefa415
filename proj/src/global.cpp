#include "gspzeta/global.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gspzeta/errors.hpp"

namespace gspzeta {

namespace {
constexpr double kPi = std::numbers::pi;

Complex real_pow(double base, Complex e) { return std::exp(e * std::log(base)); }
}  // namespace

Complex a_lambda(const std::vector<ClassDatum>& classes) {
    if (classes.empty()) throw InvalidArgument("a(Lambda) needs at least one ideal class");
    Complex sum{0.0, 0.0};
    for (const auto& c : classes) sum += c.lambda_t * c.fourier;
    return sum;
}

Complex BadPrime::value() const {
    if (y_exact) return {y_exact->to_double(), 0.0};
    if (y_value) return *y_value;
    std::ostringstream os;
    os << "no Y_p value supplied for bad prime " << p;
    throw InvalidArgument(os.str());
}

GlobalSpec GlobalSpec::make(int l, int D, Complex a, std::vector<BadPrime> bad_primes) {
    GlobalSpec spec;
    spec.l = l;
    spec.D = D;
    spec.a_lambda = a;
    spec.bad_primes = std::move(bad_primes);
    spec.validate();
    return spec;
}

void GlobalSpec::validate() const {
    if (l < 3) throw InvalidArgument("Siegel weight l must be >= 3");
    if (D <= 0 || (D % 4 != 0 && D % 4 != 3)) throw InvalidArgument("D must be a positive integer = 0 or 3 mod 4");
    for (const auto& bp : bad_primes) {
        if (bp.p < 2) throw InvalidArgument("bad prime must be >= 2");
        (void)bp.value();
    }
}

Complex y_infty(Complex s, const GlobalSpec& spec) {
    const Complex linear = 6.0 * s + static_cast<double>(spec.l) - 1.0;
    if (std::abs(linear) < 1e-12) throw PoleError("6s + l - 1 vanishes");
    return std::conj(spec.a_lambda) * kPi * real_pow(spec.D, -3.0 * s - spec.l / 2.0) *
           real_pow(4.0 * kPi, -3.0 * s + 1.5 - 1.5 * spec.l) *
           complex_gamma(3.0 * s + 1.5 * spec.l - 1.5) / linear;
}

SpecialValueConstant special_value_constant(const GlobalSpec& spec) {
    spec.validate();
    SpecialValueConstant out;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * spec.l - 5));
    mpz_class d_pow;
    mpz_pow_ui(d_pow.get_mpz_t(), mpz_class(spec.D).get_mpz_t(), static_cast<unsigned long>(spec.l - 1));
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(4 * spec.l - 6));
    out.mantissa = Rational(fact, d_pow * two_pow);
    out.mantissa.canonicalize();
    out.sqrt_factor = spec.D;
    for (const auto& bp : spec.bad_primes) out.bad_prime_product *= bp.value();
    out.value = std::conj(spec.a_lambda) * out.mantissa.get_d() * std::sqrt(static_cast<double>(spec.D)) *
                out.bad_prime_product;
    return out;
}

QScalar local_y_at_special_point(const LocalInstance& inst, int l) {
    const RatFnT y = y_factor(inst);
    return y.evaluate(QScalar::half_power(inst.q(), 3 - l));
}

}  // namespace gspzeta
