#include <doctest.h>

#include "gspzeta/errors.hpp"
#include "gspzeta/json_io.hpp"
#include "gspzeta/sweep.hpp"

using namespace gspzeta;
using io::Json;

namespace {

Json worked() {
    return Json::parse(R"({
      "q": 4,
      "satake": ["2", "1", "1", "2"],
      "bessel": {"legendre": -1, "lambda_varpi": "2"},
      "gl2": {"kind": "RamifiedPSUnramAlpha", "alpha": "1", "beta": "3", "n": 1}
    })");
}

std::string parse_error_of(const Json& j) {
    try {
        io::instance_from_json(j);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("scalar encoding round-trips") {
    const QScalar x(Rational(-3, 4), Rational(5, 2), 7);
    CHECK(io::to_json(x) == Json{{"rat", "-3/4"}, {"sqrt", "5/2"}});
    CHECK(io::qscalar_from_json(io::to_json(x), 7) == x);
    CHECK(io::qscalar_from_json(Json("1/3"), 7) == QScalar(Rational(1, 3)));
    CHECK(io::qscalar_from_json(Json(4), 7) == QScalar(4));
}

TEST_CASE("instances round-trip") {
    const LocalInstance inst = io::instance_from_json(worked());
    CHECK(inst.order == kDefaultOrder);
    const LocalInstance again = io::instance_from_json(io::to_json(inst));
    CHECK(io::to_json(again) == io::to_json(inst));
    for (std::uint64_t i = 0; i < 12; ++i) {
        auto rng = instance_rng(1, i);
        const LocalInstance r = random_instance(static_cast<SweepSuite>(i % 6), rng);
        CHECK(io::to_json(io::instance_from_json(io::to_json(r))) == io::to_json(r));
    }
}

TEST_CASE("parse errors name the field") {
    Json j = worked();
    j["gl2"]["beta"] = "3/0";
    CHECK(parse_error_of(j).find("$.gl2.beta") != std::string::npos);
    j = worked();
    j["satake"].erase(3);
    CHECK(parse_error_of(j).find("$.satake") != std::string::npos);
    j = worked();
    j.erase("bessel");
    CHECK(parse_error_of(j).find("$.bessel") != std::string::npos);
    j = worked();
    j["gl2"]["kind"] = "Mystery";
    CHECK(parse_error_of(j).find("$.gl2.kind") != std::string::npos);
    j = worked();
    j["bessel"]["lambda_varpi"] = "5";
    CHECK(parse_error_of(j).find("InvalidBesselDatum") != std::string::npos);
}

TEST_CASE("arch and global specs") {
    const ArchSpec a = io::arch_spec_from_json(Json::parse(R"({"l": 10, "l1": 10, "D": 4, "s": "7/6"})"));
    CHECK(a.ir == Complex(9.0, 0.0));
    CHECK(std::abs(a.s - 7.0 / 6.0) < 1e-15);
    CHECK_THROWS_AS(io::arch_spec_from_json(Json::parse(R"({"l": 10, "l1": 10, "D": 4, "s": -5})")), ParseError);

    const GlobalSpec g = io::global_spec_from_json(Json::parse(R"({
      "l": 10, "D": 3,
      "classes": [{"lambda_t": 1, "fourier": {"re": 2}}, {"lambda_t": -1, "fourier": {"re": 0.5}}],
      "bad_primes": [{"p": 2, "y": 0.5},
                     {"p": 2, "instance": {"q": 4, "satake": ["2","1","1","2"],
                       "bessel": {"legendre": -1, "lambda_varpi": "2"},
                       "gl2": {"kind": "RamifiedPSUnramAlpha", "alpha": "1", "beta": "3", "n": 1}}}]
    })"));
    CHECK(g.a_lambda == Complex(1.5, 0.0));
    REQUIRE(g.bad_primes.size() == 2);
    REQUIRE(g.bad_primes[1].y_exact);
    CHECK(g.bad_primes[1].y_exact->q() == 4);
}

TEST_CASE("sweep is deterministic and independent of the worker count") {
    SweepConfig one;
    one.seed = 12345;
    one.workers = 1;
    SweepConfig many = one;
    many.workers = 4;
    const SweepResult a = run_sweep(one);
    const SweepResult b = run_sweep(many);
    CHECK(a.lines == b.lines);
    CHECK(a.total == 70);
    CHECK(a.failures == 0);
}

TEST_CASE("corrupted Y-table is caught and failures are re-runnable") {
    SweepConfig config;
    config.seed = 3;
    config.verify.corrupt_y_table = true;
    config.suites = {{SweepSuite::Case2Inert, 3}, {SweepSuite::Case3, 2}};
    const SweepResult r = run_sweep(config);
    CHECK(r.failures == 3);
    const Json first = Json::parse(r.lines.front());
    CHECK_FALSE(first["pass"].get<bool>());
    const LocalInstance echoed = io::instance_from_json(first["instance"]);
    CHECK(verify_local(echoed).pass);
    CHECK_FALSE(verify_local(echoed, {.corrupt_y_table = true}).pass);
}
