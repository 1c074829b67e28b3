#pragma once

// The model zoo: exact run probabilities and seeded path samplers.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "onedep/rational.hpp"
#include "onedep/rng.hpp"
#include "onedep/run_seq.hpp"

namespace onedep {

/// Descents of an i.i.d. continuous sequence.
struct Eulerian {};
/// Bernoulli(p) trials.
struct Iid {
    Rational p;
};
/// 1(Y_k = Y_{k+1} = 1) over Bernoulli(p) trials.
struct OnePair {
    Rational p;
};
/// 1(Y_k > Y_{k+1}) over uniform digits {0, .., b-1}.
struct Carries {
    int b = 10;
};
/// Stationary edge flipping on the integer line; X_n is W_n or W_{n-1}
/// depending on which adjacent edge was updated last.
struct Flipping {
    Rational p;
};
/// One-run gf 1 + alpha v + beta v^2 (no three consecutive ones).
struct NonTwoBlock {
    Rational alpha;
    Rational beta;
};

using ModelSpec = std::variant<Eulerian, Iid, OnePair, Carries, Flipping, NonTwoBlock>;

struct ModelOptions {
    /// Largest order for which Flipping run probabilities are enumerated.
    std::size_t flipping_depth = 7;
    /// String length up to which NonTwoBlock parameters are checked.
    std::size_t non2bf_depth = 6;
};

std::string model_name(const ModelSpec& m);
/// e.g. "onepair(p=1/2)".
std::string describe(const ModelSpec& m);
bool has_sampler(const ModelSpec& m);

/// Throws ValidationError when parameters are out of range.
void validate(const ModelSpec& m, const ModelOptions& opts = {});

RunSeq zero_runs(const ModelSpec& m, std::size_t order, const ModelOptions& opts = {});
RunSeq one_runs(const ModelSpec& m, std::size_t order, const ModelOptions& opts = {});

struct Path {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::size_t count() const;
};

/// X_1..X_n from the model's background construction.
Path sample_path(const ModelSpec& m, std::size_t n, Rng& rng);
Path sample_path(const ModelSpec& m, std::size_t n, std::uint64_t seed);

/// A string X_1..X_n with zeros exactly at `zeros` (1-based) whose
/// determinantal probability is negative.
struct StringWitness {
    std::size_t n = 0;
    std::vector<std::size_t> zeros;
    Rational probability;
};

struct Non2bfCheck {
    std::optional<StringWitness> witness;
    bool valid() const { return !witness.has_value(); }
};

/// Scans all strings of length 1..depth (by length, then by number of zeros,
/// then lexicographically in the zero positions) and reports the first one
/// with negative probability.
Non2bfCheck validate_non2bf(const Rational& alpha, const Rational& beta, std::size_t depth);

}  // namespace onedep
