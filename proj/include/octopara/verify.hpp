#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace octopara {

struct PropertyResult {
    std::string name;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool informational = false;         // reported, never counted as failure
    std::vector<uint64_t> failing_trials;  // first few, reproduce with the same --seed
};

struct RunReport {
    std::string suite;
    uint64_t trials = 0;
    double wall_seconds = 0.0;
    std::vector<PropertyResult> properties;

    uint64_t total_failures() const;
};

// Suite names: octonion, module, operator, polarization, spectral, funcalc,
// oracle. Deterministic given (trials, seed, tol); trials fan out to worker
// threads capped by OCTOPARA_THREADS. Throws UnknownSuiteError.
RunReport run_suite(const std::string& name, uint64_t trials, uint64_t seed, double tol);

const std::vector<std::string>& suite_names();

}  // namespace octopara
