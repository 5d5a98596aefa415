#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "gspzeta/errors.hpp"
#include "gspzeta/sweep.hpp"
#include "gspzeta/zeta_local.hpp"

using namespace gspzeta;

namespace {

LocalInstance worked_case2() {
    LocalInstance inst;
    inst.satake.q = 4;
    inst.satake.gamma = {QScalar(2), QScalar(1), QScalar(1), QScalar(2)};
    inst.bessel.legendre = Legendre::Inert;
    inst.bessel.lambda_varpi = QScalar(2);
    inst.rep = Gl2Local::ramified_ps(4, QScalar(1), QScalar(3), 1, false);
    return inst;
}

LocalInstance worked_case3() {
    LocalInstance inst = worked_case2();
    inst.rep = Gl2Local::steinberg(4, QScalar(1));
    return inst;
}

// Coefficients with sqrt(4) replaced by 2.
std::vector<Rational> specialized(const SeriesT& s) {
    std::vector<Rational> out;
    for (const auto& c : s.coeffs()) out.push_back(oracle::specialize_square(c));
    return out;
}

PolyT rational_poly(std::initializer_list<Rational> cs) {
    std::vector<QScalar> v;
    for (const auto& c : cs) v.emplace_back(c);
    return PolyT(v);
}

PolyT one_minus(Rational c) { return PolyT::one_minus(QScalar(c)); }

const SweepSuite kAllSuites[] = {SweepSuite::Case1,
                                 SweepSuite::Case2Inert,
                                 SweepSuite::Case2RamifiedBetaChiRamified,
                                 SweepSuite::Case2RamifiedBetaChiUnramified,
                                 SweepSuite::Case2Split,
                                 SweepSuite::Case3};

}  // namespace

TEST_CASE("worked ramified principal series instance") {
    const LocalInstance inst = worked_case2();
    // Frozen with exact fractions from an independent script, sqrt(4) = 2.
    const std::vector<Rational> expected = {
        Rational(1),           Rational(3, 2),         Rational(45, 32),        Rational(69, 64),
        Rational(379, 512),    Rational(243, 512),     Rational(2381, 8192),    Rational(2823, 16384),
        Rational(13071, 131072), Rational(1857, 32768), Rational(66577, 2097152), Rational(73737, 4194304),
        Rational(323603, 33554432)};
    CHECK(specialized(zeta_series_lhs(inst)) == expected);
    CHECK(specialized(hq_substituted(inst)) == expected);
    CHECK(specialized(ratfn_to_series(zeta_closed_rhs(inst), 12)) == expected);

    const PolyT quartic = one_minus(Rational(1, 2)) * one_minus(Rational(1, 2)) * one_minus(Rational(1, 4)) *
                          one_minus(Rational(1, 4));
    const RatFnT printed(rational_poly({1, 0, Rational(-1, 32)}), quartic);
    CHECK(specialized(ratfn_to_series(printed, 12)) == expected);
    CHECK(specialized(ratfn_to_series(lfactor_gsp4_gl2_case2(inst.satake, inst.rep), 12)) ==
          specialized(ratfn_to_series(RatFnT::inverse_of(quartic), 12)));

    CHECK(lfactor_chi_restriction(inst.satake, inst.rep).denom() == rational_poly({1, 0, Rational(-1, 24)}));
    CHECK(lfactor_triple_case2(inst.rep, inst.bessel, inst.satake).denom() == rational_poly({1, 0, Rational(-1, 32)}));
    CHECK(y_factor(inst).denom() == rational_poly({1, 0, Rational(-1, 24)}));
    CHECK(y_factor(inst).numer() == PolyT::constant(1));

    const VerificationReport r = verify_local(inst);
    CHECK(r.pass);
    REQUIRE(r.lhs_vs_hq);
    REQUIRE(r.lhs_vs_rhs);
    CHECK(r.lhs_vs_hq->compared_through == 12);
}

TEST_CASE("Steinberg instance reduces to the Bessel coefficients") {
    const LocalInstance inst = worked_case3();
    const auto lhs = specialized(zeta_series_lhs(inst));
    const auto b = specialized(bessel_coeffs(inst.satake, inst.bessel, 12));
    CHECK(lhs == b);
    const VerificationReport r = verify_local(inst);
    CHECK(r.pass);
    CHECK_FALSE(r.rhs_series.has_value());
    CHECK_THROWS_AS(zeta_closed_rhs(inst), UnsupportedCase);
}

TEST_CASE("library sums agree with the brute-force zeta oracle") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto rng = instance_rng(99, i);
        const LocalInstance inst = random_instance(kAllSuites[i % 6], rng, 8);
        const SeriesT lhs = zeta_series_lhs(inst);
        const auto ref = oracle::zeta_lhs(inst);
        for (int l = 0; l <= 8; ++l) CHECK(lhs[l] == ref[l]);
    }
}

TEST_CASE("ramified representation gives the constant series") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto rng = instance_rng(3, i);
        const LocalInstance inst = random_instance(SweepSuite::Case1, rng);
        const SeriesT lhs = zeta_series_lhs(inst);
        CHECK(lhs[0].is_one());
        for (int l = 1; l <= 12; ++l) CHECK(lhs[l].is_zero());
        CHECK(zeta_closed_rhs(inst).numer() == zeta_closed_rhs(inst).denom());
    }
}

TEST_CASE("identity survives rescaling of the Satake parameters") {
    for (std::uint64_t i = 0; i < 18; ++i) {
        auto rng = instance_rng(21, i);
        LocalInstance inst = random_instance(kAllSuites[1 + i % 5], rng, 10);
        const QScalar u(Rational(static_cast<long>(i % 4) + 2, 3));
        for (auto& g : inst.satake.gamma) g *= u;
        inst.bessel.lambda_varpi *= u * u;
        if (inst.bessel.lambda_varpi_L) *inst.bessel.lambda_varpi_L *= u;
        if (inst.bessel.lambda_varpi_conj) *inst.bessel.lambda_varpi_conj *= u;
        CHECK(verify_local(inst).pass);
    }
}

TEST_CASE("extra Y-table factor when beta chi is unramified") {
    auto rng = instance_rng(4, 0);
    const LocalInstance inst = random_instance(SweepSuite::Case2RamifiedBetaChiUnramified, rng);
    CHECK(y_factor(inst).denom().degree() == 3);
    CHECK(lfactor_triple_case2(inst.rep, inst.bessel, inst.satake).denom().degree() == 2);
    LocalInstance other = inst;
    other.rep.beta_chi_unramified = false;
    CHECK(y_factor(other).denom().degree() == 2);
    CHECK(y_factor(inst, {.corrupt_y_table = true}).denom() == PolyT::constant(1));
}

TEST_CASE("unramified closed form") {
    SatakeParams s;
    s.q = 4;
    s.gamma = {QScalar(1), QScalar(1), QScalar(1), QScalar(1)};
    BesselDatum b;
    b.lambda_varpi = QScalar(1);
    const Gl2Local rep = Gl2Local::unramified_ps(4, QScalar(1), QScalar(1));
    const RatFnT f = unramified_closed(s, rep, b);
    CHECK(f.denom().coeff(0).is_one());
    CHECK(f.numer().coeff(0).is_one());

    LocalInstance inst;
    inst.satake = s;
    inst.bessel = b;
    inst.rep = rep;
    CHECK_THROWS_AS(zeta_series_lhs(inst), UnsupportedCase);
    CHECK(y_factor(inst).denom() == PolyT::constant(1));

    // Undo the chi and triple factors; what remains is the product of eight linear factors.
    const RatFnT l_pi_tau = f * lfactor_chi_restriction(s, rep) *
                            RatFnT::inverse_of(unramified_triple_inverse(s, rep, b));
    PolyT eight = PolyT::constant(1);
    for (int k = 0; k < 8; ++k) eight = eight * PolyT::one_minus(QScalar::half_power(4, -1));
    CHECK(eight.degree() == 8);
    CHECK(ratfn_to_series(l_pi_tau, 12) == ratfn_to_series(RatFnT::inverse_of(eight), 12));
}

TEST_CASE("split triple factor matches the two ramified-beta halves") {
    SatakeParams s;
    s.q = 3;
    s.gamma = {QScalar(2), QScalar(-1), QScalar(3), QScalar(-6)};
    BesselDatum b;
    b.legendre = Legendre::Split;
    b.lambda_varpi = QScalar(6);
    b.lambda_varpi_L = QScalar(2);
    b.lambda_varpi_conj = QScalar(3);
    const QScalar alpha(Rational(1, 2)), beta(Rational(5, 7));
    const PolyT full = unramified_triple_inverse(s, Gl2Local::unramified_ps(3, alpha, beta), b);
    const PolyT half_a = lfactor_triple_case2(Gl2Local::ramified_ps(3, alpha, beta, 1, false), b, s).denom();
    const PolyT half_b = lfactor_triple_case2(Gl2Local::ramified_ps(3, beta, alpha, 1, false), b, s).denom();
    CHECK(full == half_a * half_b);
    CHECK(full.degree() == 4);
}

TEST_CASE("instance validation") {
    LocalInstance inst = worked_case2();
    inst.bessel.lambda_varpi = QScalar(3);
    CHECK_THROWS_AS(inst.validate(), InvalidBesselDatum);
    inst = worked_case2();
    inst.rep = Gl2Local::ramified_ps(5, QScalar(1), QScalar(3), 1, false);
    CHECK_THROWS_AS(inst.validate(), InvalidArgument);
}
