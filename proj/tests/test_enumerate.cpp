#include <random>

#include "doctest.h"
#include "onedep/enumerate.hpp"
#include "onedep/models.hpp"
#include "onedep/oracles.hpp"
#include "onedep/transforms.hpp"
#include "test_support.hpp"

using namespace onedep;
using onedep::testing::Q;

namespace {

PairSet from_mask(int m, std::uint32_t mask) {
    std::set<std::pair<int, int>> b;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if ((mask >> (x * m + y)) & 1u) b.emplace(x, y);
    return {m, std::move(b)};
}

Integer ipow(int base, std::size_t e) { return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(e)); }

/// Count of length-k strings with every adjacent pair in B, by enumeration.
Integer bstrings_bruteforce(const PairSet& ps, std::size_t k) {
    const auto m = static_cast<std::size_t>(ps.alphabet());
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= m;
    std::uint64_t good = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> s(k);
        std::size_t c = code;
        for (auto& x : s) {
            x = static_cast<int>(c % m);
            c /= m;
        }
        bool ok = true;
        for (std::size_t i = 0; i + 1 < k && ok; ++i) ok = ps.contains(s[i], s[i + 1]);
        good += ok;
    }
    return Integer(good);
}

}  // namespace

TEST_CASE("bstring_counts") {
    const PairSet florez(4, {{0, 1}});
    const auto c = bstring_counts(florez, 3);
    CHECK(c == std::vector<Integer>{1, 4, 1, 0});
    for (std::size_t k = 0; k <= 3; ++k) CHECK(c[k] == (k == 0 ? Integer(1) : bstrings_bruteforce(florez, k)));

    const auto all = bstring_counts(PairSet::all(3), 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(all[k] == ipow(3, k));

    const auto none = bstring_counts(PairSet(5, {}), 4);
    CHECK(none == std::vector<Integer>{1, 5, 0, 0, 0});

    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        const PairSet ps = from_mask(3, static_cast<std::uint32_t>(gen() & 0x1ffu));
        const auto counts = bstring_counts(ps, 6);
        for (std::size_t k = 1; k <= 6; ++k) CHECK(counts[k] == bstrings_bruteforce(ps, k));
    }
}

TEST_CASE("bstring_gf") {
    CHECK(bstring_gf(bstring_counts(PairSet(4, {{0, 1}}), 4)) == USeries(4, {Q(1), Q(4), Q(1)}));
    CHECK(bstring_gf(bstring_counts(PairSet(3, {}), 3)) == USeries(3, {Q(1), Q(3)}));

    SUBCASE("G(v) = 1 + m v P(m v) for the uniform 2-block factor") {
        std::mt19937_64 gen(7);
        for (int trial = 0; trial < 5; ++trial) {
            const int m = 2 + trial % 3;
            const PairSet ps = from_mask(m, static_cast<std::uint32_t>(gen()) & ((1u << (m * m)) - 1));
            const std::size_t order = 6;
            // P(v) = sum_k p_k v^k; the v^order coefficient never reaches G at this order.
            USeries p(order);
            for (std::size_t k = 0; k < order; ++k) p[k] = transfer_matrix_distribution(ps, k).probs[k];
            const Rational mm(m);
            const USeries expected = USeries::one(order) + mm * times_v(scale_argument(p, mm));
            CHECK(bstring_gf(bstring_counts(ps, order)) == expected);
        }
    }
    CHECK_THROWS_AS(bstring_gf({}), UsageError);
}

TEST_CASE("pattern_count_table examples") {
    const CountTable florez = pattern_count_table(PairSet(4, {{0, 1}}), 5);
    CHECK(florez(1, 0) == 4);
    CHECK(florez(2, 1) == 1);
    CHECK(florez(2, 0) == 15);
    CHECK(florez(2, 2) == 0);
    CHECK(florez.max_length() == 5);

    const CountTable onepair = pattern_count_table(PairSet(2, {{1, 1}}), 3);
    CHECK(onepair.row(3) == std::vector<Integer>{5, 2, 1});

    const CountTable empty = pattern_count_table(PairSet(3, {}), 4);
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(empty(n, 0) == ipow(3, n));
        for (std::size_t k = 1; k < n; ++k) CHECK(empty(n, k) == 0);
    }

    const PairSet desc = PairSet::descents(3);
    CHECK(pattern_count_table(desc, 3).row(3) == pattern_count_bruteforce(desc, 3));
    CHECK_THROWS_AS(pattern_count_table(desc, 0), UsageError);
    CHECK_THROWS_AS(empty(5, 0), UsageError);
}

TEST_CASE("pattern_count_table against brute force for every pair set with m <= 3") {
    for (int m = 1; m <= 3; ++m)
        for (std::uint32_t mask = 0; mask < (1u << (m * m)); ++mask) {
            const PairSet ps = from_mask(m, mask);
            const CountTable table = pattern_count_table(ps, 7);
            for (std::size_t n = 1; n <= 7; ++n) {
                CAPTURE(m);
                CAPTURE(mask);
                CAPTURE(n);
                REQUIRE(table.row(n) == pattern_count_bruteforce(ps, n));
                Integer sum = 0;
                for (const auto& f : table.row(n)) sum += f;
                CHECK(sum == ipow(m, n));
            }
        }
}

TEST_CASE("pattern_count_table against brute force for random pair sets with m = 4") {
    std::mt19937_64 gen(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const auto mask = static_cast<std::uint32_t>(gen() & 0xffffu);
        const PairSet ps = from_mask(4, mask);
        const CountTable table = pattern_count_table(ps, 7);
        for (std::size_t n = 1; n <= 7; ++n) {
            CAPTURE(mask);
            CHECK(table.row(n) == pattern_count_bruteforce(ps, n));
        }
    }
}

TEST_CASE("descent counts match the carries law") {
    for (int m : {2, 3, 4}) {
        const CountTable table = pattern_count_table(PairSet::descents(m), 8);
        const Bgf b = bgf_from_zero_runs(zero_runs(Carries{m}, 8));
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t k = 0; k < n; ++k) CHECK(Rational(table(n, k)) == Rational(ipow(m, n)) * extract(b, k, n - 1));
    }
}

TEST_CASE("florez_count") {
    CHECK(florez_count(4, 1, 0) == 4);
    CHECK(florez_count(4, 1, 1) == 1);
    CHECK(florez_count(4, 2, 0) == 15);
    CHECK(florez_count(4, 0, 0) == 1);
    for (int a : {2, 3, 4}) {
        const CountTable table = pattern_count_table(PairSet(a, {{0, 1}}), 8);
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::size_t m = 0; n + m <= 8; ++m) {
                if (n + m == 0) continue;
                CAPTURE(a);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(florez_count(a, n, m) == table(n + m, m));
            }
    }
    CHECK_THROWS_AS(florez_count(1, 2, 0), UsageError);
}
