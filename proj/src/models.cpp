#include "onedep/models.hpp"

#include <algorithm>
#include <sstream>

#include "onedep/detpp.hpp"
#include "onedep/oracles.hpp"
#include "onedep/transforms.hpp"

namespace onedep {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void require_probability(const Rational& p, const char* model, bool open) {
    const bool ok = open ? (p > 0 && p < 1) : (p >= 0 && p <= 1);
    if (!ok)
        throw ValidationError(std::string(model) + ": p = " + to_string(p) + " outside " +
                              (open ? "(0, 1)" : "[0, 1]"));
}

USeries non2bf_one_run_series(const Rational& alpha, const Rational& beta, std::size_t order) {
    std::vector<Rational> c{Rational(1), alpha, beta};
    c.resize(std::min<std::size_t>(3, order + 1));
    return USeries(order, std::move(c));
}

FlippingLaw flipping_law(const Flipping& f, std::size_t order, const ModelOptions& opts) {
    if (order > opts.flipping_depth)
        throw DepthExceeded("flipping run probabilities are enumerated only up to order " +
                            std::to_string(opts.flipping_depth));
    return flipping_exact(f.p, order);
}

RunSeq dual_of(const RunSeq& r) { return RunSeq::checked(dual_kind(r.kind()), involution(r).series()); }

}  // namespace

std::size_t Path::count() const { return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1)); }

std::string model_name(const ModelSpec& m) {
    return std::visit(overloaded{[](const Eulerian&) { return "eulerian"; },
                                 [](const Iid&) { return "iid"; },
                                 [](const OnePair&) { return "onepair"; },
                                 [](const Carries&) { return "carries"; },
                                 [](const Flipping&) { return "flipping"; },
                                 [](const NonTwoBlock&) { return "non2bf"; }},
                      m);
}

std::string describe(const ModelSpec& m) {
    std::ostringstream os;
    os << model_name(m);
    std::visit(overloaded{[](const Eulerian&) {},
                          [&](const Iid& x) { os << "(p=" << to_string(x.p) << ")"; },
                          [&](const OnePair& x) { os << "(p=" << to_string(x.p) << ")"; },
                          [&](const Carries& x) { os << "(b=" << x.b << ")"; },
                          [&](const Flipping& x) { os << "(p=" << to_string(x.p) << ")"; },
                          [&](const NonTwoBlock& x) {
                              os << "(alpha=" << to_string(x.alpha) << ",beta=" << to_string(x.beta) << ")";
                          }},
               m);
    return os.str();
}

bool has_sampler(const ModelSpec& m) { return !std::holds_alternative<NonTwoBlock>(m); }

void validate(const ModelSpec& m, const ModelOptions& opts) {
    std::visit(overloaded{[](const Eulerian&) {},
                          [](const Iid& x) { require_probability(x.p, "iid", false); },
                          [](const OnePair& x) { require_probability(x.p, "onepair", false); },
                          [](const Carries& x) {
                              if (x.b < 2) throw ValidationError("carries: b must be at least 2");
                          },
                          [](const Flipping& x) { require_probability(x.p, "flipping", true); },
                          [&](const NonTwoBlock& x) {
                              RunSeq::checked(RunKind::one_run, non2bf_one_run_series(x.alpha, x.beta, 2));
                              const Non2bfCheck check = validate_non2bf(x.alpha, x.beta, opts.non2bf_depth);
                              if (!check.valid()) {
                                  std::ostringstream os;
                                  os << "non2bf: (alpha, beta) = (" << to_string(x.alpha) << ", "
                                     << to_string(x.beta) << ") gives negative probability "
                                     << to_string(check.witness->probability) << " to a string of length "
                                     << check.witness->n;
                                  throw ValidationError(os.str());
                              }
                          }},
               m);
}

RunSeq zero_runs(const ModelSpec& m, std::size_t order, const ModelOptions& opts) {
    validate(m, opts);
    return std::visit(
        overloaded{[&](const Eulerian&) {
                       USeries s(order);
                       for (std::size_t n = 0; n <= order; ++n) s[n] = Rational(Integer(1), factorial(n + 1));
                       return RunSeq::checked(RunKind::zero_run, s);
                   },
                   [&](const Iid& x) {
                       USeries s(order);
                       Rational q = 1 - x.p, acc(1);
                       for (std::size_t n = 0; n <= order; ++n, acc *= q) s[n] = acc;
                       return RunSeq::checked(RunKind::zero_run, s);
                   },
                   [&](const Carries& x) {
                       USeries s(order);
                       const Integer b(x.b);
                       Integer bpow = b;
                       for (std::size_t n = 0; n <= order; ++n, bpow *= b) {
                           const long nn = static_cast<long>(n);
                           s[n] = Rational(binomial(x.b + nn, nn + 1), bpow);
                       }
                       return RunSeq::checked(RunKind::zero_run, s);
                   },
                   [&](const Flipping& x) {
                       const FlippingLaw law = flipping_law(x, order, opts);
                       return RunSeq::checked(RunKind::zero_run, USeries(order, law.zero_runs));
                   },
                   [&](const OnePair&) { return dual_of(one_runs(m, order, opts)); },
                   [&](const NonTwoBlock&) { return dual_of(one_runs(m, order, opts)); }},
        m);
}

RunSeq one_runs(const ModelSpec& m, std::size_t order, const ModelOptions& opts) {
    validate(m, opts);
    return std::visit(
        overloaded{[&](const Eulerian&) {
                       USeries s(order);
                       for (std::size_t n = 0; n <= order; ++n) s[n] = Rational(Integer(1), factorial(n + 1));
                       return RunSeq::checked(RunKind::one_run, s);
                   },
                   [&](const Iid& x) {
                       USeries s(order);
                       Rational acc(1);
                       for (std::size_t n = 0; n <= order; ++n, acc *= x.p) s[n] = acc;
                       return RunSeq::checked(RunKind::one_run, s);
                   },
                   [&](const OnePair& x) {
                       USeries s(order);
                       s[0] = 1;
                       Rational acc = x.p * x.p;
                       for (std::size_t n = 1; n <= order; ++n, acc *= x.p) s[n] = acc;
                       return RunSeq::checked(RunKind::one_run, s);
                   },
                   [&](const Carries& x) {
                       USeries s(order);
                       const Integer b(x.b);
                       Integer bpow = b;
                       for (std::size_t n = 0; n <= order; ++n, bpow *= b)
                           s[n] = Rational(binomial(x.b, static_cast<long>(n) + 1), bpow);
                       return RunSeq::checked(RunKind::one_run, s);
                   },
                   [&](const Flipping& x) {
                       const FlippingLaw law = flipping_law(x, order, opts);
                       return RunSeq::checked(RunKind::one_run, USeries(order, law.one_runs));
                   },
                   [&](const NonTwoBlock& x) {
                       return RunSeq::checked(RunKind::one_run, non2bf_one_run_series(x.alpha, x.beta, order));
                   }},
        m);
}

Path sample_path(const ModelSpec& m, std::size_t n, Rng& rng) {
    if (!has_sampler(m)) throw SamplerUnavailable("no sampler for " + describe(m));
    validate(m);
    Path path;
    path.bits.resize(n);
    std::visit(overloaded{[&](const Eulerian&) {
                              const auto ranks = rng.permutation(n + 1);
                              for (std::size_t i = 0; i < n; ++i) path.bits[i] = ranks[i] > ranks[i + 1];
                          },
                          [&](const Iid& x) {
                              for (auto& b : path.bits) b = rng.bernoulli(x.p);
                          },
                          [&](const OnePair& x) {
                              bool prev = rng.bernoulli(x.p);
                              for (auto& b : path.bits) {
                                  const bool next = rng.bernoulli(x.p);
                                  b = prev && next;
                                  prev = next;
                              }
                          },
                          [&](const Carries& x) {
                              auto prev = rng.below(static_cast<std::uint64_t>(x.b));
                              for (auto& b : path.bits) {
                                  const auto next = rng.below(static_cast<std::uint64_t>(x.b));
                                  b = prev > next;
                                  prev = next;
                              }
                          },
                          [&](const Flipping& x) {
                              // U_0..U_n enter only through their relative order.
                              const auto u = rng.permutation(n + 1);
                              std::vector<std::uint8_t> w(n + 1);
                              for (auto& wi : w) wi = rng.bernoulli(x.p);
                              for (std::size_t i = 1; i <= n; ++i) path.bits[i - 1] = u[i] > u[i - 1] ? w[i] : w[i - 1];
                          },
                          [](const NonTwoBlock&) {}},
               m);
    return path;
}

Path sample_path(const ModelSpec& m, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_path(m, n, rng);
}

Non2bfCheck validate_non2bf(const Rational& alpha, const Rational& beta, std::size_t depth) {
    if (depth < 1) throw UsageError("validate_non2bf: depth must be at least 1");
    const ExtendedOneRuns p(RunSeq::formal(RunKind::one_run, non2bf_one_run_series(alpha, beta, depth)));
    for (std::size_t n = 1; n <= depth; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            // Lexicographic k-subsets of {1..n}.
            std::vector<std::size_t> zeros(k);
            for (std::size_t i = 0; i < k; ++i) zeros[i] = i + 1;
            while (true) {
                const Rational prob = string_probability(p, n, zeros);
                if (prob < 0) return {StringWitness{n, zeros, prob}};
                std::size_t i = k;
                while (i > 0 && zeros[i - 1] == n - k + i) --i;
                if (i == 0) break;
                ++zeros[i - 1];
                for (std::size_t j = i; j < k; ++j) zeros[j] = zeros[j - 1] + 1;
            }
        }
    }
    return {};
}

}  // namespace onedep
