#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "onedep/errors.hpp"
#include "onedep/rational.hpp"

namespace onedep {

/// Seedable, splittable pseudo-random source. A child from split(stream)
/// depends only on the parent key and the stream, not on parent usage.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(seed), engine_(engine_for(seed)) {}

    std::uint64_t key() const { return key_; }

    Rng split(std::uint64_t stream) const {
        std::seed_seq seq{lo(key_), hi(key_), lo(stream), hi(stream), 0x5eedu};
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        return Rng((static_cast<std::uint64_t>(words[1]) << 32) | words[0]);
    }

    /// Uniform on {0, .., bound - 1}.
    std::uint64_t below(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    /// Exact Bernoulli(p) for a rational p whose denominator fits in 64 bits.
    bool bernoulli(const Rational& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        const Integer& den = denominator(p);
        if (den > std::numeric_limits<std::uint64_t>::max())
            throw UsageError("Rng::bernoulli: denominator exceeds 64 bits");
        return below(den.convert_to<std::uint64_t>()) < numerator(p).convert_to<std::uint64_t>();
    }

    /// Uniformly random permutation of {0, .., n - 1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), engine_);
        return perm;
    }

private:
    static std::uint32_t lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
    static std::uint32_t hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

    static std::mt19937_64 engine_for(std::uint64_t key) {
        std::seed_seq seq{lo(key), hi(key)};
        return std::mt19937_64(seq);
    }

    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace onedep
