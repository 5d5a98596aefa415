#include "gspzeta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "gspzeta/errors.hpp"
#include "gspzeta/json_io.hpp"

namespace gspzeta {

namespace {

QScalar small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 18);
    auto draw = [&] {
        const int v = dist(rng);
        return v <= 9 ? v - 10 : v - 9;  // [-9, -1] u [1, 9]
    };
    const long num = draw();
    const long den = draw();
    return QScalar(Rational(num, den));
}

std::int64_t small_q(std::mt19937_64& rng) {
    static constexpr std::int64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
    std::uniform_int_distribution<std::size_t> dist(0, std::size(qs) - 1);
    return qs[dist(rng)];
}

SatakeParams paired_satake(std::int64_t q, const QScalar& g1, const QScalar& g2, const QScalar& g3) {
    SatakeParams s;
    s.q = q;
    s.gamma = {g1, g2, g3, g1 * g3 / g2};
    return s;
}

}  // namespace

std::string_view to_string(SweepSuite suite) {
    switch (suite) {
        case SweepSuite::Case1: return "case1";
        case SweepSuite::Case2Inert: return "case2-inert";
        case SweepSuite::Case2RamifiedBetaChiRamified: return "case2-ramified-betachi-ramified";
        case SweepSuite::Case2RamifiedBetaChiUnramified: return "case2-ramified-betachi-unramified";
        case SweepSuite::Case2Split: return "case2-split";
        case SweepSuite::Case3: return "case3";
    }
    return "?";
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

LocalInstance random_instance(SweepSuite suite, std::mt19937_64& rng, int order) {
    const std::int64_t q = small_q(rng);
    LocalInstance inst;
    inst.order = order;

    Legendre legendre = Legendre::Inert;
    if (suite == SweepSuite::Case2Split) legendre = Legendre::Split;
    if (suite == SweepSuite::Case2RamifiedBetaChiRamified || suite == SweepSuite::Case2RamifiedBetaChiUnramified) {
        legendre = Legendre::Ramified;
    }
    if (suite == SweepSuite::Case1 || suite == SweepSuite::Case3) {
        // Any Legendre symbol is admissible here.
        std::uniform_int_distribution<int> leg(-1, 1);
        legendre = static_cast<Legendre>(leg(rng));
    }

    inst.bessel.legendre = legendre;
    if (legendre == Legendre::Ramified) {
        // Lambda(varpi) = Lambda(varpi_L)^2 fixes omega_pi; solve for gamma3 and gamma4.
        const QScalar lam_l = small_rational(rng);
        const QScalar omega = lam_l * lam_l;
        const QScalar g1 = small_rational(rng);
        const QScalar g2 = small_rational(rng);
        inst.satake.q = q;
        inst.satake.gamma = {g1, g2, omega / g1, omega / g2};
        inst.bessel.lambda_varpi_L = lam_l;
        inst.bessel.lambda_varpi = omega;
    } else {
        const QScalar g1 = small_rational(rng);
        const QScalar g2 = small_rational(rng);
        const QScalar g3 = small_rational(rng);
        inst.satake = paired_satake(q, g1, g2, g3);
        const QScalar omega = inst.satake.central_character();
        inst.bessel.lambda_varpi = omega;
        if (legendre == Legendre::Split) {
            const QScalar lam_l = small_rational(rng);
            inst.bessel.lambda_varpi_L = lam_l;
            inst.bessel.lambda_varpi_conj = omega / lam_l;
        }
    }

    std::uniform_int_distribution<int> cond(1, 4);
    switch (suite) {
        case SweepSuite::Case1: inst.rep = Gl2Local::ramified_other(q, small_rational(rng), cond(rng)); break;
        case SweepSuite::Case3: inst.rep = Gl2Local::steinberg(q, small_rational(rng)); break;
        default: {
            const QScalar alpha = small_rational(rng);
            const QScalar beta = small_rational(rng);
            inst.rep = Gl2Local::ramified_ps(q, alpha, beta, cond(rng),
                                             suite == SweepSuite::Case2RamifiedBetaChiUnramified);
        }
    }
    inst.validate();
    return inst;
}

std::vector<std::pair<SweepSuite, int>> SweepConfig::default_suites() {
    return {{SweepSuite::Case1, 20},
            {SweepSuite::Case2Inert, 10},
            {SweepSuite::Case2RamifiedBetaChiRamified, 10},
            {SweepSuite::Case2RamifiedBetaChiUnramified, 10},
            {SweepSuite::Case2Split, 10},
            {SweepSuite::Case3, 10}};
}

unsigned default_worker_count() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        throw InvalidArgument(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepConfig& config) {
    struct Job {
        SweepSuite suite;
        std::uint64_t index;
    };
    std::vector<Job> jobs;
    for (const auto& [suite, count] : config.suites) {
        for (int i = 0; i < count; ++i) jobs.push_back({suite, jobs.size()});
    }

    std::vector<std::string> lines(jobs.size());
    std::vector<char> passed(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            auto rng = instance_rng(config.seed, jobs[k].index);
            io::Json line{{"index", jobs[k].index}, {"suite", std::string(to_string(jobs[k].suite))}};
            try {
                const LocalInstance inst = random_instance(jobs[k].suite, rng, config.order);
                const VerificationReport report = verify_local(inst, config.verify);
                line["pass"] = report.pass;
                if (!report.pass) {
                    line["report"] = io::to_json(report);
                    line["instance"] = io::to_json(inst);
                }
                passed[k] = report.pass;
            } catch (const Error& e) {
                line["pass"] = false;
                line["error"] = e.what();
            }
            lines[k] = line.dump();
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(config.workers ? config.workers : default_worker_count(),
                                        static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    SweepResult result;
    result.total = static_cast<int>(jobs.size());
    result.failures = static_cast<int>(std::count(passed.begin(), passed.end(), 0));
    result.lines = std::move(lines);
    result.lines.push_back(io::Json{{"summary", {{"seed", config.seed},
                                                 {"order", config.order},
                                                 {"total", result.total},
                                                 {"failures", result.failures}}}}
                               .dump());
    return result;
}

}  // namespace gspzeta
