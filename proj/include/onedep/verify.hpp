#pragma once

// Named verification suites that cross-check the transforms against each
// other and against the brute-force and Monte Carlo oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "onedep/models.hpp"

namespace onedep {

struct CheckResult {
    std::string suite;
    std::string check;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Truncation order for the exact suites.
    std::size_t order = 20;
    /// Monte Carlo trials per sampled distribution.
    std::uint64_t trials = 100000;
    /// Standard-error threshold per bin.
    double tolerance = 4.0;
};

/// Suite names in execution order (without "all").
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Unknown names throw UsageError.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opts = {});

/// The models every exact suite iterates over, one per model family.
std::vector<ModelSpec> verification_models();

/// Order at which a model's run probabilities can be produced, capped at `wanted`.
std::size_t reachable_order(const ModelSpec& m, std::size_t wanted);

/// Options that let Flipping run probabilities reach the enumeration limit.
ModelOptions deep_model_options();

}  // namespace onedep
