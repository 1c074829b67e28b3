// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
//
// Every reference value here is produced in this file (permutation and string
// enumeration, Fibonacci and binomial numbers) or by the oracles module; the
// library's own verification suites are deliberately not reused.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "onedep/detpp.hpp"
#include "onedep/enumerate.hpp"
#include "onedep/models.hpp"
#include "onedep/oracles.hpp"
#include "onedep/transforms.hpp"

using namespace onedep;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

constexpr std::size_t kOrder = 20;
constexpr std::uint64_t kTrials = 100000;
constexpr double kSigmas = 4.0;

ModelOptions deep() {
    ModelOptions o;
    o.flipping_depth = kFlippingMaxDepth;
    return o;
}

std::vector<ModelSpec> reference_models() {
    return {Eulerian{}, Iid{Rational(1, 3)}, OnePair{Rational(1, 2)}, Carries{10}, Flipping{Rational(1, 2)},
            NonTwoBlock{Rational(1, 4), Rational(1, 16)}};
}

std::size_t order_for(const ModelSpec& m, std::size_t wanted) {
    return std::holds_alternative<Flipping>(m) ? std::min(wanted, kFlippingMaxDepth) : wanted;
}

RunSeq q_of(const ModelSpec& m, std::size_t order) { return zero_runs(m, order, deep()); }
RunSeq p_of(const ModelSpec& m, std::size_t order) { return one_runs(m, order, deep()); }

Integer choose(std::size_t n, std::size_t k) {
    std::vector<Integer> row{Integer(1)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> next(row.size() + 1, Integer(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

Integer ipow(long base, std::size_t e) { return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(e)); }

// 1 ------------------------------------------------------------------------
Outcome eulerian_exactness() {
    Outcome o;
    const Bgf b = bgf_from_zero_runs(zero_runs(Eulerian{}, 7));
    for (std::size_t n = 0; n <= 7; ++n) {
        std::vector<Integer> counts(n + 1, Integer(0));
        std::vector<int> perm(n + 1);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::size_t d = 0;
            for (std::size_t i = 0; i < n; ++i) d += perm[i] > perm[i + 1];
            counts[d] += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const Rational total(factorial(static_cast<unsigned>(n + 1)));
        for (std::size_t k = 0; k <= n; ++k)
            if (extract(b, k, n) * total != Rational(counts[k]))
                o.fail("row " + std::to_string(n) + ", k = " + std::to_string(k));
    }
    if (o.passed) o.detail = "rows 0..7 times (n+1)! equal permutation descent counts";
    return o;
}

// 2 ------------------------------------------------------------------------
Outcome two_form_agreement() {
    Outcome o;
    for (const ModelSpec& m : reference_models()) {
        const std::size_t order = order_for(m, kOrder);
        if (bgf_from_zero_runs(q_of(m, order)) != bgf_from_one_runs(p_of(m, order))) o.fail(describe(m));
    }
    if (o.passed) o.detail = "six models through v^20 (flipping through v^9, its enumeration limit)";
    return o;
}

// 3 ------------------------------------------------------------------------
Outcome involution_property() {
    Outcome o;
    const auto check = [&](const RunSeq& r, const std::string& what) {
        if (involution(involution(r)) != r) o.fail(what + ": not an involution");
        if (shift(involution(r).series()) != shifted_involution(shift(r.series())))
            o.fail(what + ": shifted form disagrees");
    };
    for (const ModelSpec& m : reference_models()) {
        const std::size_t order = order_for(m, kOrder);
        check(q_of(m, order), describe(m) + " zero runs");
        check(p_of(m, order), describe(m) + " one runs");
        if (involution(q_of(m, order)) != p_of(m, order)) o.fail(describe(m) + ": zero runs do not map to one runs");
    }
    std::mt19937_64 gen(20261016);
    for (int i = 0; i < 100; ++i) {
        USeries s(kOrder);
        s[0] = 1;
        for (std::size_t j = 1; j <= kOrder; ++j) {
            const long den = std::uniform_int_distribution<long>(1, 9)(gen);
            s[j] = s[j - 1] * Rational(std::uniform_int_distribution<long>(0, den)(gen), den);
        }
        check(RunSeq::checked(i % 2 ? RunKind::zero_run : RunKind::one_run, s), "random #" + std::to_string(i));
    }
    if (o.passed) o.detail = "six models and 100 random run sequences at order 20, plain and shifted forms";
    return o;
}

// 4 ------------------------------------------------------------------------
Outcome recursion_consistency() {
    Outcome o;
    for (const ModelSpec& m : reference_models()) {
        const std::size_t order = order_for(m, 15);
        const RunSeq q = q_of(m, order);
        const Bgf b = bgf_from_zero_runs(q);
        for (std::size_t n = 0; n <= order; ++n)
            if (pgf_by_recursion(q, n) != b.row(n)) o.fail(describe(m) + " row " + std::to_string(n));
    }
    if (o.passed) o.detail = "n <= 15 for six models (flipping n <= 9)";
    return o;
}

// 5 ------------------------------------------------------------------------
Outcome determinantal_checks() {
    Outcome o;
    for (const ModelSpec& m : reference_models()) {
        const std::string name = describe(m);
        const std::size_t order = order_for(m, kOrder);
        const RunSeq p = p_of(m, order);
        const Bgf b = bgf_from_zero_runs(q_of(m, order));
        const ExtendedOneRuns ext(p);
        const KernelBand kb = kernel_from_one_runs(p, static_cast<int>(order) - 2);

        for (std::size_t n = 0; n <= 8; ++n) {
            if (pgf_determinant(ext, n) != b.row(n)) o.fail(name + ": determinant pgf, n = " + std::to_string(n));
            if (pgf_fredholm(kb, n) != b.row(n)) o.fail(name + ": Fredholm pgf, n = " + std::to_string(n));
        }

        // v G_k(v) P(v) = -1: coefficients of the product, computed directly.
        for (std::size_t j = 0; j + 1 < order; ++j) {
            Rational c(0);
            for (std::size_t i = 0; i <= j; ++i) c += kb(static_cast<int>(i) - 1) * p[j - i];
            if (c != (j == 0 ? Rational(-1) : Rational(0))) o.fail(name + ": G_k P != -1/v at v^" + std::to_string(j));
        }

        for (int lag = -1; lag <= 5; ++lag)
            if (kernel_direct(p, 2, 2 + lag) != kb(lag)) o.fail(name + ": chain sum, lag " + std::to_string(lag));

        for (std::size_t n = 1; n <= 6; ++n) {
            Rational total(0);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<std::size_t> zeros;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u) zeros.push_back(i + 1);
                total += string_probability(ext, n, zeros);
            }
            if (total != 1) o.fail(name + ": string probabilities sum to " + to_string(total));
        }
    }
    if (o.passed)
        o.detail = "determinant = Fredholm = bgf for n <= 8; G_k P = -1/v; chain sums for lags <= 5; "
                   "2^n string probabilities sum to 1 for n <= 6";
    return o;
}

// 6 ------------------------------------------------------------------------
Outcome onepair_relations() {
    Outcome o;
    for (const Rational& p : {Rational(1, 2), Rational(1, 3)}) {
        const Bgf b = bgf_from_zero_runs(zero_runs(OnePair{p}, 15));
        const auto q = [&](long n, long k) {
            return k < 0 || k > n ? Rational(0)
                                  : extract(b, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        };
        for (long n = 2; n <= 15; ++n)
            for (long k = 0; k <= n; ++k)
                if (q(n, k) != (1 - p) * q(n - 1, k) + p * q(n - 1, k - 1) +
                                   p * (1 - p) * (q(n - 2, k) - q(n - 2, k - 1)))
                    o.fail("recursion at p = " + to_string(p) + ", n = " + std::to_string(n));
    }
    const Bgf half = bgf_from_zero_runs(zero_runs(OnePair{Rational(1, 2)}, 15));
    std::vector<Integer> fib{0, 1};
    while (fib.size() < 20) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (std::size_t n = 0; n <= 15; ++n)
        if (extract(half, 0, n) != Rational(fib[n + 3], ipow(2, n + 1))) o.fail("Fibonacci, n = " + std::to_string(n));
    if (o.passed)
        o.detail = "recursion for n <= 15 at p = 1/2, 1/3; q_{n,0} = Fib(n+3)/2^(n+1); note: 2^n q_{n,0} is not "
                   "integral (2 q_{1,0} = " +
                   to_string(2 * extract(half, 0, 1)) + ")";
    return o;
}

// 7 ------------------------------------------------------------------------
/// f(n, k) for n = 1..max_n by depth-first enumeration of all strings.
std::vector<std::vector<Integer>> enumerate_counts(int m, std::uint32_t mask, std::size_t max_n) {
    std::vector<std::vector<std::uint64_t>> raw(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) raw[n].assign(n, 0);
    const std::function<void(std::size_t, int, std::size_t)> walk = [&](std::size_t len, int last, std::size_t k) {
        ++raw[len][k];
        if (len == max_n) return;
        for (int y = 0; y < m; ++y) walk(len + 1, y, k + ((mask >> (last * m + y)) & 1u));
    };
    for (int x = 0; x < m; ++x) walk(1, x, 0);
    std::vector<std::vector<Integer>> out(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto c : raw[n]) out[n].emplace_back(c);
    return out;
}

Outcome enumeration() {
    Outcome o;
    std::size_t sets = 0;
    for (int m = 1; m <= 4; ++m)
        for (std::uint32_t mask = 0; mask < (1u << (m * m)); ++mask) {
            std::set<std::pair<int, int>> b;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if ((mask >> (x * m + y)) & 1u) b.emplace(x, y);
            const CountTable table = pattern_count_table(PairSet(m, b), 7);
            const auto brute = enumerate_counts(m, mask, 7);
            ++sets;
            for (std::size_t n = 1; n <= 7; ++n) {
                Integer sum = 0;
                for (const auto& f : table.row(n)) sum += f;
                if (table.row(n) != brute[n] || sum != ipow(m, n))
                    o.fail("m = " + std::to_string(m) + ", mask " + std::to_string(mask) + ", n = " + std::to_string(n));
            }
        }
    for (int a : {2, 3, 4}) {
        const auto brute = enumerate_counts(a, 1u << 1, 8);  // B = {(0, 1)}
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t k = 0; n + k <= 8; ++k)
                if (florez_count(a, n, k) != brute[n + k][k])
                    o.fail("closed form, a = " + std::to_string(a));
    }
    if (o.passed)
        o.detail = "all " + std::to_string(sets) + " pair sets over m <= 4 symbols, n <= 7; closed form for a = 2..4, "
                   "n + m <= 8; row sums m^n";
    return o;
}

// 8 ------------------------------------------------------------------------
Outcome transform_consistency() {
    Outcome o;
    const Rational p(1, 3);
    const RunSeq q = zero_runs(Iid{p}, kOrder);
    Bgf expected(kOrder);
    for (std::size_t n = 0; n <= kOrder; ++n) {
        std::vector<Rational> c;
        for (std::size_t k = 0; k <= n; ++k)
            c.push_back(Rational(choose(n, k)) * power(p, static_cast<unsigned>(k)) *
                        power(1 - p, static_cast<unsigned>(n - k)));
        expected.row(n) = RPoly(c);
    }
    if (bgf_from_zero_runs(q) != expected) o.fail("iid: 1-dependent");
    if (bgf_exchangeable(q) != expected) o.fail("iid: exchangeable");
    if (bgf_renewal(q) != expected) o.fail("iid: renewal");
    if (bgf_stationary_renewal(q) != expected) o.fail("iid: stationary renewal");
    for (const ModelSpec& m : {ModelSpec{OnePair{Rational(1, 2)}}, ModelSpec{OnePair{Rational(1, 3)}}, ModelSpec{Carries{2}}}) {
        const RunSeq runs = zero_runs(m, 15);
        if (bgf_stationary_renewal(runs) != bgf_from_zero_runs(runs)) o.fail(describe(m) + ": stationary renewal");
    }
    if (o.passed)
        o.detail = "iid(p=1/3) binomial under all four transforms through v^20; one-pair (p = 1/2, 1/3) and "
                   "carries(b=2) stationary renewal = 1-dependent through v^15";
    return o;
}

// 9, 10 ---------------------------------------------------------------------
/// Largest per-bin standard score over a seeded run, with one reseeded retry.
double sampled_score(const ModelSpec& m, const Distribution& exact, std::uint64_t seed, bool& retried) {
    double score = max_standard_score(monte_carlo_distribution(m, exact.n, kTrials, seed), exact);
    retried = score > kSigmas;
    if (retried) score = max_standard_score(monte_carlo_distribution(m, exact.n, kTrials, seed ^ 0x9e3779b97f4a7c15ull), exact);
    return score;
}

Outcome flipping_loop() {
    Outcome o;
    double worst = 0;
    int retries = 0;
    std::uint64_t seed = 900;
    for (const Rational& p : {Rational(1, 2), Rational(1, 3)}) {
        const FlippingLaw law = flipping_exact(p, 6);
        const RunSeq q = RunSeq::checked(RunKind::zero_run, USeries(6, law.zero_runs));
        const Bgf direct = bgf_from_zero_runs(q);
        const Bgf dual = bgf_from_one_runs(involution(q));
        for (std::size_t n = 0; n <= 6; ++n) {
            const Distribution exact = flipping_exact(p, n).distribution;
            if (direct.row(n) != RPoly(exact.probs) || dual.row(n) != RPoly(exact.probs))
                o.fail("p = " + to_string(p) + ": bgf row " + std::to_string(n) + " differs from enumeration");
            if (n == 0) continue;
            bool retried = false;
            const double score = sampled_score(Flipping{p}, exact, seed++, retried);
            retries += retried;
            worst = std::max(worst, score);
            if (score > kSigmas) o.fail("p = " + to_string(p) + ", n = " + std::to_string(n) + ": |z| = " + std::to_string(score));
        }
    }
    if (o.passed) {
        std::ostringstream os;
        os << "exact loop n <= 6 at p = 1/2, 1/3; Monte Carlo max |z| = " << std::fixed << std::setprecision(2) << worst
           << " over 10^5 trials per n (" << retries << " retries)";
        o.detail = os.str();
    }
    return o;
}

Outcome sampler_statistics() {
    Outcome o;
    double worst = 0;
    int retries = 0;
    std::uint64_t seed = 1000;
    for (const ModelSpec& m : reference_models()) {
        if (!has_sampler(m)) continue;
        const Bgf b = bgf_from_zero_runs(q_of(m, 8));
        for (std::size_t n : {3, 5, 8}) {
            Distribution exact{n, {}};
            for (std::size_t k = 0; k <= n; ++k) exact.probs.push_back(extract(b, k, n));
            bool retried = false;
            const double score = sampled_score(m, exact, seed++, retried);
            retries += retried;
            worst = std::max(worst, score);
            if (score > kSigmas) o.fail(describe(m) + ", n = " + std::to_string(n) + ": |z| = " + std::to_string(score));
        }
    }
    if (o.passed) {
        std::ostringstream os;
        os << "five sampled models, n = 3, 5, 8; max |z| = " << std::fixed << std::setprecision(2) << worst
           << " over 10^5 trials (" << retries << " retries)";
        o.detail = os.str();
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Eulerian exactness", eulerian_exactness},
        {"two-form agreement", two_form_agreement},
        {"involution", involution_property},
        {"recursion", recursion_consistency},
        {"determinantal cross-checks", determinantal_checks},
        {"one-pair recursion and Fibonacci", onepair_relations},
        {"enumeration", enumeration},
        {"transform consistency", transform_consistency},
        {"flipping internal loop", flipping_loop},
        {"sampler statistics", sampler_statistics}};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !outcome.passed;
        std::cout << (outcome.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " — "
                  << outcome.detail << " [" << std::fixed << std::setprecision(1) << seconds << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
