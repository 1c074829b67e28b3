#include "onedep/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

namespace onedep {

namespace {

constexpr std::uint64_t kShards = 8;

std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return perm;
}

}  // namespace

bool Distribution::well_formed() const {
    if (probs.size() != n + 1) return false;
    Rational total(0);
    for (const auto& p : probs) {
        if (p < 0) return false;
        total += p;
    }
    return total == 1;
}

Distribution descent_distribution_bruteforce(std::size_t n) {
    if (n > 8) throw DepthExceeded("descent_distribution_bruteforce: n <= 8");
    std::vector<Integer> counts(n + 1, Integer(0));
    auto perm = identity_permutation(n + 1);
    do {
        std::size_t descents = 0;
        for (std::size_t i = 0; i < n; ++i) descents += perm[i] > perm[i + 1];
        counts[descents] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Integer total = factorial(static_cast<unsigned>(n + 1));
    Distribution d{n, {}};
    for (const auto& c : counts) d.probs.emplace_back(c, total);
    return d;
}

Distribution transfer_matrix_distribution(const PairSet& ps, std::span<const Rational> weights, std::size_t n) {
    const auto m = static_cast<std::size_t>(ps.alphabet());
    if (weights.size() != m) throw ValidationError("transfer_matrix_distribution: one weight per symbol");
    Rational total(0);
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError("transfer_matrix_distribution: negative weight");
        total += w;
    }
    if (total != 1) throw ValidationError("transfer_matrix_distribution: weights must sum to 1");

    // state[y][k] = P(last symbol y, k pairs in B so far)
    std::vector<std::vector<Rational>> state(m, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t y = 0; y < m; ++y) state[y][0] = weights[y];
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::vector<Rational>> next(m, std::vector<Rational>(n + 1, Rational(0)));
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t k = 0; k <= step; ++k) {
                if (state[x][k] == 0) continue;
                for (std::size_t y = 0; y < m; ++y) {
                    const std::size_t k2 = k + (ps.contains(static_cast<int>(x), static_cast<int>(y)) ? 1 : 0);
                    next[y][k2] += state[x][k] * weights[y];
                }
            }
        state = std::move(next);
    }
    Distribution d{n, std::vector<Rational>(n + 1, Rational(0))};
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t k = 0; k <= n; ++k) d.probs[k] += state[y][k];
    return d;
}

Distribution transfer_matrix_distribution(const PairSet& ps, std::size_t n) {
    const std::vector<Rational> w(static_cast<std::size_t>(ps.alphabet()), Rational(1, ps.alphabet()));
    return transfer_matrix_distribution(ps, w, n);
}

namespace {

FlippingLaw enumerate_flipping(const Rational& p, std::size_t n) {
    // X_i = W_i when U_i > U_{i-1}, else W_{i-1}; only the up/down signature
    // of U_0..U_n matters, so orderings are tallied per signature first.
    std::vector<Integer> by_signature(std::size_t{1} << n, Integer(0));
    auto perm = identity_permutation(n + 1);
    do {
        std::size_t signature = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (perm[i] > perm[i - 1]) signature |= std::size_t{1} << (i - 1);
        by_signature[signature] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Integer orderings = factorial(static_cast<unsigned>(n + 1));
    const Rational q = 1 - p;
    FlippingLaw law{{n, std::vector<Rational>(n + 1, Rational(0))},
                    std::vector<Rational>(n + 1, Rational(0)),
                    std::vector<Rational>(n + 1, Rational(0))};

    for (std::size_t signature = 0; signature < by_signature.size(); ++signature) {
        if (by_signature[signature] == 0) continue;
        const Rational weight(by_signature[signature], orderings);

        // Source W index of each X_i; indices are non-decreasing in i, so
        // equal sources form contiguous groups.
        std::vector<std::size_t> group_sizes;
        std::vector<std::size_t> distinct_prefix{0};
        std::size_t last_source = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t source = (signature >> (i - 1)) & 1u ? i : i - 1;
            if (source != last_source) {
                group_sizes.push_back(0);
                last_source = source;
            }
            ++group_sizes.back();
            distinct_prefix.push_back(group_sizes.size());
        }

        // Law of sum_g c_g W_g: product of (q + p z^{c_g}).
        std::vector<Rational> pgf{Rational(1)};
        for (std::size_t c : group_sizes) {
            std::vector<Rational> next(pgf.size() + c, Rational(0));
            for (std::size_t k = 0; k < pgf.size(); ++k) {
                next[k] += pgf[k] * q;
                next[k + c] += pgf[k] * p;
            }
            pgf = std::move(next);
        }
        for (std::size_t k = 0; k <= n; ++k) law.distribution.probs[k] += weight * pgf[k];
        for (std::size_t j = 0; j <= n; ++j) {
            law.zero_runs[j] += weight * power(q, static_cast<unsigned>(distinct_prefix[j]));
            law.one_runs[j] += weight * power(p, static_cast<unsigned>(distinct_prefix[j]));
        }
    }
    return law;
}

}  // namespace

FlippingLaw flipping_exact(const Rational& p, std::size_t n) {
    if (n > kFlippingMaxDepth)
        throw DepthExceeded("flipping_exact: n <= " + std::to_string(kFlippingMaxDepth));
    if (p < 0 || p > 1) throw ValidationError("flipping_exact: p outside [0, 1]");

    // The enumeration costs (n+1)!; results are kept for the process lifetime.
    static std::mutex mutex;
    static std::map<std::pair<std::string, std::size_t>, FlippingLaw> cache;
    const auto key = std::make_pair(to_string(p), n);
    {
        const std::lock_guard lock(mutex);
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
    }
    FlippingLaw law = enumerate_flipping(p, n);
    const std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(law)).first->second;
}

EmpiricalLaw monte_carlo_distribution(const ModelSpec& m, std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw EmptyTrials("monte_carlo_distribution: trials must be positive");
    if (!has_sampler(m)) throw SamplerUnavailable("no sampler for " + describe(m));
    validate(m);

    const Rng root(seed);
    std::vector<std::future<std::vector<std::uint64_t>>> shards;
    for (std::uint64_t s = 0; s < kShards; ++s) {
        const std::uint64_t share = trials / kShards + (s < trials % kShards ? 1 : 0);
        shards.push_back(std::async(std::launch::async, [&m, n, share, rng = root.split(s)]() mutable {
            std::vector<std::uint64_t> counts(n + 1, 0);
            for (std::uint64_t t = 0; t < share; ++t) ++counts[sample_path(m, n, rng).count()];
            return counts;
        }));
    }

    EmpiricalLaw law{n, trials, std::vector<std::uint64_t>(n + 1, 0), {}, {}};
    for (auto& shard : shards) {
        const auto counts = shard.get();
        for (std::size_t k = 0; k <= n; ++k) law.counts[k] += counts[k];
    }
    const auto t = static_cast<double>(trials);
    for (std::size_t k = 0; k <= n; ++k) {
        const double f = static_cast<double>(law.counts[k]) / t;
        law.frequency.push_back(f);
        law.std_error.push_back(std::sqrt(f * (1 - f) / t));
    }
    return law;
}

double max_standard_score(const EmpiricalLaw& empirical, const Distribution& exact) {
    if (empirical.n != exact.n) throw UsageError("max_standard_score: horizon mismatch");
    const auto t = static_cast<double>(empirical.trials);
    double worst = 0;
    for (std::size_t k = 0; k <= exact.n; ++k) {
        const double p = to_double(exact.probs[k]);
        const double f = empirical.frequency[k];
        if (exact.probs[k] == 0 || exact.probs[k] == 1) {
            if (f != p) return std::numeric_limits<double>::infinity();
            continue;
        }
        worst = std::max(worst, std::abs(f - p) / std::sqrt(p * (1 - p) / t));
    }
    return worst;
}

std::vector<Integer> pattern_count_bruteforce(const PairSet& ps, std::size_t n) {
    if (n < 1) throw UsageError("pattern_count_bruteforce: n must be at least 1");
    const auto m = static_cast<std::size_t>(ps.alphabet());
    double size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= static_cast<double>(m);
    if (size > 1e7) throw DepthExceeded("pattern_count_bruteforce: m^n exceeds 1e7");

    std::vector<std::uint8_t> in_b(m * m, 0);
    for (auto [x, y] : ps.pairs()) in_b[static_cast<std::size_t>(x) * m + static_cast<std::size_t>(y)] = 1;

    std::vector<std::uint64_t> counts(n, 0);
    std::vector<int> s(n, 0);
    while (true) {
        std::size_t k = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            k += in_b[static_cast<std::size_t>(s[i]) * m + static_cast<std::size_t>(s[i + 1])];
        ++counts[k];
        std::size_t i = 0;
        while (i < n && ++s[i] == static_cast<int>(m)) s[i++] = 0;
        if (i == n) break;
    }
    std::vector<Integer> out;
    for (auto c : counts) out.emplace_back(c);
    return out;
}

}  // namespace onedep
