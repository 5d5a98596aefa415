#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gspzeta/arch_zeta.hpp"
#include "gspzeta/errors.hpp"
#include "gspzeta/global.hpp"

using namespace gspzeta;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("class sums") {
    CHECK(a_lambda({{1.0, Complex(2.0, -1.0)}}) == Complex(2.0, -1.0));
    CHECK(std::abs(a_lambda({{1.0, 3.0}, {-1.0, 3.0}})) == 0.0);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> n;
    std::vector<ClassDatum> data;
    Complex direct = 0.0;
    for (int j = 0; j < 3; ++j) {
        data.push_back({Complex(n(rng), n(rng)), Complex(n(rng), n(rng))});
        direct += data.back().lambda_t * data.back().fourier;
    }
    CHECK(std::abs(a_lambda(data) - direct) < 1e-15);
    CHECK_THROWS_AS(a_lambda({}), InvalidArgument);
}

TEST_CASE("archimedean factor at s = 7/6") {
    const GlobalSpec spec = GlobalSpec::make(10, 3, 1.0, {});
    const double expected = kPi * std::pow(3.0, -8.5) * std::pow(4 * kPi, -17.0) * 20922789888000.0 / 16.0;
    CHECK(rel(y_infty(7.0 / 6.0, spec), expected) < 1e-12);
    const GlobalSpec doubled = GlobalSpec::make(10, 3, 2.0, {});
    CHECK(rel(y_infty(7.0 / 6.0, doubled), 2.0 * expected) < 1e-14);
}

TEST_CASE("archimedean factor equals the local closed form") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> re(0.2, 3.0), im(-2.0, 2.0);
    const Complex a(0.7, -1.3);
    for (int l : {10, 11, 14}) {
        const GlobalSpec spec = GlobalSpec::make(l, 4, a, {});
        for (int i = 0; i < 10; ++i) {
            const Complex s(re(rng), im(rng));
            const ArchSpec arch = ArchSpec::discrete_series(l, l, 4, s);
            CHECK(rel(y_infty(s, spec), std::conj(a) * arch_zeta_closed(arch)) < 1e-10);
        }
    }
}

TEST_CASE("special value constant") {
    const SpecialValueConstant c = special_value_constant(GlobalSpec::make(10, 3, 1.0, {}));
    Rational expected(mpz_class("1307674368000"), mpz_class(19683) * (mpz_class(1) << 34));
    expected.canonicalize();
    CHECK(c.mantissa == expected);
    CHECK(c.sqrt_factor == 3);
    const double direct = std::pow(3.0, -8.5) * std::pow(2.0, -34.0) * 1307674368000.0;
    CHECK(rel(c.value, direct) < 1e-14);
    CHECK(c.bad_prime_product == Complex(1.0, 0.0));

    BadPrime one{5, Complex(1.0, 0.0), std::nullopt};
    CHECK(special_value_constant(GlobalSpec::make(10, 3, 1.0, {one})).value == c.value);

    BadPrime a{2, Complex(0.5, 0.25), std::nullopt};
    BadPrime b{3, std::nullopt, QScalar(Rational(7, 3))};
    const Complex ab = special_value_constant(GlobalSpec::make(10, 3, 1.0, {a, b})).value;
    const Complex ba = special_value_constant(GlobalSpec::make(10, 3, 1.0, {b, a})).value;
    CHECK(rel(ab, ba) < 1e-15);
    CHECK(rel(ab, c.value * Complex(0.5, 0.25) * (7.0 / 3.0)) < 1e-14);

    CHECK_THROWS_AS(GlobalSpec::make(10, 3, 1.0, {BadPrime{7, std::nullopt, std::nullopt}}), InvalidArgument);
    CHECK_THROWS_AS(GlobalSpec::make(10, 5, 1.0, {}), InvalidArgument);
}

TEST_CASE("constant relates to the archimedean factor at the special point") {
    for (int l : {10, 12, 13}) {
        const GlobalSpec spec = GlobalSpec::make(l, 7, Complex(0.3, 0.4), {});
        const Complex c = special_value_constant(spec).value;
        CHECK(rel(y_infty(l / 6.0 - 0.5, spec), c * std::pow(kPi, 4.0 - 2 * l)) < 1e-10);
    }
}

TEST_CASE("local correction factor at the special point") {
    LocalInstance inst;
    inst.satake.q = 4;
    inst.satake.gamma = {QScalar(2), QScalar(1), QScalar(1), QScalar(2)};
    inst.bessel.lambda_varpi = QScalar(2);
    inst.rep = Gl2Local::ramified_ps(4, QScalar(1), QScalar(3), 1, false);
    // Y = (1 - T^2/24)^{-1} at T = q^{-7/2} for l = 10
    const QScalar t = QScalar::half_power(4, -7);
    const QScalar expected = (QScalar(1) - t * t / QScalar(24)).inverse();
    CHECK(local_y_at_special_point(inst, 10) == expected);
}
