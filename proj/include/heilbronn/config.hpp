#pragma once

#include <cstdint>
#include <string>

namespace heilbronn {

// Batch knobs shared by every subcommand; embedded in every report.
struct RunConfig {
    uint64_t pair_bound = 20;           // Y: primes q1 < q2 <= min(Y, p-1)
    double pv_constant = 1.0;           // character-sum error constant
    uint64_t enumeration_cap = 100000000;
    uint64_t seed = 0;
    std::string format = "json";        // json | csv
    unsigned threads = 0;               // 0 = auto

    void validate() const; // throws precondition_error

    bool operator==(const RunConfig&) const = default;
};

// Worker count: HEILBRONN_THREADS env overrides the config; 0 = hardware.
unsigned resolve_threads(unsigned configured);

} // namespace heilbronn
