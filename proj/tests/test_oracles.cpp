#include <cmath>

#include "doctest.h"
#include "onedep/models.hpp"
#include "onedep/oracles.hpp"
#include "onedep/transforms.hpp"
#include "test_support.hpp"

using namespace onedep;
using onedep::testing::Q;

namespace {

Distribution binomial_law(const Rational& p, std::size_t n) {
    Distribution d{n, {}};
    for (std::size_t k = 0; k <= n; ++k)
        d.probs.push_back(Rational(binomial(static_cast<long>(n), static_cast<long>(k))) *
                          power(p, static_cast<unsigned>(k)) * power(1 - p, static_cast<unsigned>(n - k)));
    return d;
}

}  // namespace

TEST_CASE("descent_distribution_bruteforce") {
    CHECK(descent_distribution_bruteforce(1).probs == std::vector<Rational>{Q(1, 2), Q(1, 2)});
    CHECK(descent_distribution_bruteforce(2).probs == std::vector<Rational>{Q(1, 6), Q(4, 6), Q(1, 6)});
    CHECK(descent_distribution_bruteforce(3).probs == std::vector<Rational>{Q(1, 24), Q(11, 24), Q(11, 24), Q(1, 24)});
    CHECK_THROWS_AS(descent_distribution_bruteforce(9), DepthExceeded);

    const Bgf eulerian = bgf_from_zero_runs(zero_runs(Eulerian{}, 7));
    for (std::size_t n = 0; n <= 7; ++n) {
        const Distribution d = descent_distribution_bruteforce(n);
        CHECK(d.well_formed());
        CHECK(RPoly(d.probs) == eulerian.row(n));
    }
}

TEST_CASE("transfer_matrix_distribution") {
    const PairSet onepair(2, {{1, 1}});
    const std::vector<Rational> half{Q(1, 2), Q(1, 2)};
    CHECK(transfer_matrix_distribution(onepair, half, 2).probs == std::vector<Rational>{Q(5, 8), Q(2, 8), Q(1, 8)});
    CHECK(transfer_matrix_distribution(onepair, 2).probs == std::vector<Rational>{Q(5, 8), Q(2, 8), Q(1, 8)});

    const Bgf carries = bgf_from_zero_runs(zero_runs(Carries{2}, 6));
    const Distribution d = transfer_matrix_distribution(PairSet::descents(2), 3);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(d.probs[k] == extract(carries, k, 3));

    const Rational p = Q(2, 9);
    const Distribution coins = transfer_matrix_distribution(PairSet(2, {{1, 0}, {1, 1}}), std::vector{1 - p, p}, 5);
    CHECK(coins.probs == binomial_law(p, 5).probs);

    CHECK_THROWS_AS(transfer_matrix_distribution(onepair, std::vector{Q(1, 2)}, 2), ValidationError);
    CHECK_THROWS_AS(transfer_matrix_distribution(onepair, std::vector{Q(1, 2), Q(1, 3)}, 2), ValidationError);
    CHECK_THROWS_AS(transfer_matrix_distribution(onepair, std::vector{Q(3, 2), Q(-1, 2)}, 2), ValidationError);
}

TEST_CASE("flipping_exact") {
    const Rational p = Q(2, 7);
    CHECK(flipping_exact(p, 1).distribution.probs == std::vector<Rational>{1 - p, p});
    CHECK(flipping_exact(Q(1, 2), 2).zero_runs[2] == Q(1, 3));
    const Rational q = Q(1, 2);
    CHECK(flipping_exact(Q(1, 2), 2).zero_runs[2] == (4 * q * q + 2 * q) / 6);
    CHECK(flipping_exact(Q(1), 2).distribution.probs.back() == 1);
    CHECK_THROWS_AS(flipping_exact(p, kFlippingMaxDepth + 1), DepthExceeded);
    CHECK_THROWS_AS(flipping_exact(Q(3, 2), 2), ValidationError);

    for (std::size_t n = 0; n <= 6; ++n) {
        const FlippingLaw law = flipping_exact(p, n);
        CHECK(law.distribution.well_formed());
        CHECK(law.zero_runs[n] == law.distribution.probs.front());
        CHECK(law.one_runs[n] == law.distribution.probs.back());
        CHECK(law.zero_runs[0] == 1);
    }
}

TEST_CASE("flipping loop: exact zero runs through both transform forms reproduce the exact law") {
    for (const Rational& p : {Q(1, 2), Q(1, 3)}) {
        const FlippingLaw law = flipping_exact(p, 6);
        const RunSeq q = RunSeq::checked(RunKind::zero_run, USeries(6, law.zero_runs));
        const Bgf direct = bgf_from_zero_runs(q);
        const Bgf dual = bgf_from_one_runs(involution(q));
        for (std::size_t n = 0; n <= 6; ++n) {
            const Distribution exact = flipping_exact(p, n).distribution;
            CHECK(direct.row(n) == RPoly(exact.probs));
            CHECK(dual.row(n) == RPoly(exact.probs));
        }
        CHECK(involution(q).series() == USeries(6, law.one_runs));
    }
}

TEST_CASE("monte_carlo_distribution") {
    SUBCASE("fair coins against the binomial law") {
        const EmpiricalLaw law = monte_carlo_distribution(Iid{Q(1, 2)}, 4, 100000, 11);
        CHECK(law.trials == 100000);
        std::uint64_t total = 0;
        for (auto c : law.counts) total += c;
        CHECK(total == 100000);
        CHECK(max_standard_score(law, binomial_law(Q(1, 2), 4)) <= 4);
    }
    SUBCASE("flipping against exact enumeration") {
        const EmpiricalLaw law = monte_carlo_distribution(Flipping{Q(1, 3)}, 5, 100000, 21);
        CHECK(max_standard_score(law, flipping_exact(Q(1, 3), 5).distribution) <= 4);
    }
    SUBCASE("reproducible for a fixed seed") {
        const auto a = monte_carlo_distribution(Carries{3}, 6, 5000, 77);
        const auto b = monte_carlo_distribution(Carries{3}, 6, 5000, 77);
        const auto c = monte_carlo_distribution(Carries{3}, 6, 5000, 78);
        CHECK(a.counts == b.counts);
        CHECK(a.counts != c.counts);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(monte_carlo_distribution(Iid{Q(1, 2)}, 4, 0, 1), EmptyTrials);
        CHECK_THROWS_AS(monte_carlo_distribution(NonTwoBlock{Q(0), Q(0)}, 4, 10, 1), SamplerUnavailable);
        const EmpiricalLaw law = monte_carlo_distribution(Iid{Q(1, 2)}, 4, 10, 1);
        CHECK_THROWS_AS(max_standard_score(law, binomial_law(Q(1, 2), 3)), UsageError);
    }
    SUBCASE("a degenerate bin only matches exactly") {
        const EmpiricalLaw ones = monte_carlo_distribution(Iid{Q(1)}, 3, 100, 5);
        CHECK(max_standard_score(ones, binomial_law(Q(1), 3)) == 0);
        CHECK(std::isinf(max_standard_score(ones, binomial_law(Q(1, 2), 3))) == false);
        CHECK(std::isinf(max_standard_score(ones, binomial_law(Q(0), 3))));
    }
}

TEST_CASE("pattern_count_bruteforce") {
    CHECK(pattern_count_bruteforce(PairSet(2, {{1, 1}}), 3) == std::vector<Integer>{5, 2, 1});
    CHECK(pattern_count_bruteforce(PairSet(4, {{0, 1}}), 2) == std::vector<Integer>{15, 1});
    CHECK(pattern_count_bruteforce(PairSet::all(3), 1) == std::vector<Integer>{3});
    CHECK_THROWS_AS(pattern_count_bruteforce(PairSet::all(3), 0), UsageError);
    CHECK_THROWS_AS(pattern_count_bruteforce(PairSet::all(10), 8), DepthExceeded);
}
