#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gspzeta/zeta_local.hpp"

namespace gspzeta {

/// Environment variable holding the sweep worker count.
inline constexpr const char* kWorkersEnv = "GSPZETA_WORKERS";

enum class SweepSuite {
    Case1,
    Case2Inert,
    Case2RamifiedBetaChiRamified,
    Case2RamifiedBetaChiUnramified,
    Case2Split,
    Case3,
};

std::string_view to_string(SweepSuite suite);

/// Random instance of the given suite. Rational parameters are ratios of
/// integers in [-9, 9] \ {0}; q is drawn from a small set of prime powers.
LocalInstance random_instance(SweepSuite suite, std::mt19937_64& rng, int order = kDefaultOrder);

/// Per-instance generator seeded from (seed, index) so results do not depend
/// on scheduling.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

struct SweepConfig {
    std::uint64_t seed = 0;
    int order = kDefaultOrder;
    unsigned workers = 0;  // 0: read kWorkersEnv, else hardware concurrency
    VerifyOptions verify;
    // (suite, count) pairs, run in this order
    std::vector<std::pair<SweepSuite, int>> suites = default_suites();

    static std::vector<std::pair<SweepSuite, int>> default_suites();
};

struct SweepResult {
    std::vector<std::string> lines;  // one JSON object per instance, then a summary line
    int total = 0;
    int failures = 0;
};

SweepResult run_sweep(const SweepConfig& config);

/// Worker count from kWorkersEnv, falling back to hardware concurrency.
unsigned default_worker_count();

}  // namespace gspzeta
