#include <doctest.h>

#include <random>

#include "gspzeta/errors.hpp"
#include "gspzeta/qscalar.hpp"

using namespace gspzeta;

namespace {

QScalar random_element(std::mt19937_64& rng, std::int64_t q) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return QScalar(Rational(d(rng), den(rng)), Rational(d(rng), den(rng)), q);
}

}  // namespace

TEST_CASE("square of the generator is q") {
    const QScalar r = QScalar::sqrt_q(5);
    const QScalar sq = qscalar_pow(r, 2);
    CHECK(sq.rat_part() == 5);
    CHECK(sq.sqrt_part() == 0);
}

TEST_CASE("powers of one stay one") {
    for (int k = -6; k <= 6; ++k) CHECK(qscalar_pow(QScalar(1), k).is_one());
}

TEST_CASE("inverse of sqrt(4) is formal") {
    const QScalar inv = qscalar_pow(QScalar::sqrt_q(4), -1);
    CHECK(inv.rat_part() == 0);
    CHECK(inv.sqrt_part() == Rational(1, 4));
    CHECK((inv * QScalar::sqrt_q(4)).is_one());
}

TEST_CASE("zero divisors are not invertible") {
    const QScalar z(Rational(2), Rational(-1), 4);  // 2 - sqrt(4)
    CHECK_FALSE(z.is_invertible());
    CHECK_THROWS_AS(z.inverse(), InvalidInversion);
    CHECK_THROWS_AS(qscalar_pow(QScalar(0), -1), InvalidInversion);
}

TEST_CASE("ring axioms and norm multiplicativity on random elements") {
    std::mt19937_64 rng(11);
    for (std::int64_t q : {2, 3, 4, 7, 9}) {
        for (int i = 0; i < 40; ++i) {
            const QScalar a = random_element(rng, q);
            const QScalar b = random_element(rng, q);
            const QScalar c = random_element(rng, q);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b).norm() == a.norm() * b.norm());
            if (a.is_invertible()) CHECK((a / a).is_one());
        }
    }
}

TEST_CASE("half powers combine additively") {
    for (int j = -5; j <= 5; ++j)
        for (int k = -5; k <= 5; ++k)
            CHECK(QScalar::half_power(3, j) * QScalar::half_power(3, k) == QScalar::half_power(3, j + k));
}

TEST_CASE("mixing different q is rejected") {
    CHECK_THROWS_AS(QScalar::sqrt_q(2) + QScalar::sqrt_q(3), InvalidArgument);
    CHECK_NOTHROW(QScalar(Rational(1, 2)) + QScalar::sqrt_q(3));
    CHECK_THROWS_AS(QScalar(Rational(1), Rational(1), 1), InvalidArgument);
}

TEST_CASE("rational parsing") {
    CHECK(QScalar::parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(QScalar::parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(QScalar::parse_rational("abc"), InvalidArgument);
}
