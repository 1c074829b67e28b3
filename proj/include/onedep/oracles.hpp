#pragma once

// Brute-force and statistical oracles. These depend on the series types and
// on model descriptions only, never on the transforms they are used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "onedep/models.hpp"
#include "onedep/pair_set.hpp"
#include "onedep/rational.hpp"

namespace onedep {

/// Law of S_n: probs[k] = P(S_n = k), k = 0..n.
struct Distribution {
    std::size_t n = 0;
    std::vector<Rational> probs;

    bool well_formed() const;
};

/// Descent counts over all (n+1)! permutations. n <= 8.
Distribution descent_distribution_bruteforce(std::size_t n);

/// Exact law of S_n for the 2-block factor 1((Y_k, Y_{k+1}) in B) with
/// i.i.d. Y_k of the given symbol weights, by dynamic programming over
/// (last symbol, count).
Distribution transfer_matrix_distribution(const PairSet& ps, std::span<const Rational> weights, std::size_t n);

/// Uniform symbol weights.
Distribution transfer_matrix_distribution(const PairSet& ps, std::size_t n);

struct FlippingLaw {
    Distribution distribution;
    /// P(S_j = 0) and P(S_j = j) for j = 0..n.
    std::vector<Rational> zero_runs;
    std::vector<Rational> one_runs;
};

inline constexpr std::size_t kFlippingMaxDepth = 9;

/// Enumerates all orderings of U_0..U_n; given the ordering, X_1..X_n are
/// functions of W_0..W_n, whose law is then summed out exactly.
FlippingLaw flipping_exact(const Rational& p, std::size_t n);

struct EmpiricalLaw {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> frequency;
    std::vector<double> std_error;
};

/// Seeded; trials are split over a fixed number of shards with derived seeds
/// and recombined in shard order, so the result never depends on scheduling.
EmpiricalLaw monte_carlo_distribution(const ModelSpec& m, std::size_t n, std::uint64_t trials,
                                      std::uint64_t seed);

/// Largest |freq - p| / sqrt(p(1-p)/trials) over bins. A bin with p in {0, 1}
/// contributes infinity on any mismatch and 0 otherwise.
double max_standard_score(const EmpiricalLaw& empirical, const Distribution& exact);

/// f(n, k) for k = 0..n-1 by enumerating all m^n strings. Requires m^n <= 1e7.
std::vector<Integer> pattern_count_bruteforce(const PairSet& ps, std::size_t n);

}  // namespace onedep
