// onedep: count distributions of stationary 1-dependent indicator processes.
//
//   onedep dist      --model M [params] --n N
//   onedep runs      --model M [params] [--n N] [--kind zero|one]
//   onedep kernel    --model M [params] [--hi H]
//   onedep enumerate --alphabet M (--pairs "x:y,..." | --descents) --n N
//   onedep verify    [--suite NAME] [--seed S]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 depth error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "onedep/detpp.hpp"
#include "onedep/enumerate.hpp"
#include "onedep/models.hpp"
#include "onedep/oracles.hpp"
#include "onedep/output.hpp"
#include "onedep/transforms.hpp"
#include "onedep/verify.hpp"

namespace {

using namespace onedep;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDepth = 3;

std::size_t default_order() {
    const char* env = std::getenv("ONEDEP_ORDER");
    if (env == nullptr || *env == '\0') return 20;
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string(env).size() || value < 1 || value > 200)
        throw UsageError("ONEDEP_ORDER must be an integer in 1..200, got '" + std::string(env) + "'");
    return value;
}

struct OutputArgs {
    std::string format = "csv";
    bool decimal = false;
    std::string out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--decimal", decimal, "Add approximate decimal columns (15 significant digits)");
        cmd->add_option("--out", out, "Write to FILE instead of stdout");
    }

    void emit(const Table& t) const {
        const RenderOptions opts{format == "json" ? Format::json : Format::csv, decimal};
        if (out.empty()) {
            render(t, opts, std::cout);
            return;
        }
        std::ofstream file(out, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + out + "' for writing");
        render(t, opts, file);
    }
};

struct ModelArgs {
    std::string model;
    std::optional<std::string> p, alpha, beta;
    std::optional<int> b;
    std::size_t flipping_depth = ModelOptions{}.flipping_depth;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "eulerian, iid, onepair, carries, flipping or non2bf")->required();
        cmd->add_option("--p", p, "Probability parameter (iid, onepair, flipping), e.g. 1/2");
        cmd->add_option("--b", b, "Digit base for carries");
        cmd->add_option("--alpha", alpha, "p_1 for non2bf");
        cmd->add_option("--beta", beta, "p_2 for non2bf");
        cmd->add_option("--flipping-depth", flipping_depth, "Largest order for exact flipping enumeration")
            ->check(CLI::Range(std::size_t{1}, kFlippingMaxDepth));
    }

    ModelOptions options() const {
        ModelOptions o;
        o.flipping_depth = flipping_depth;
        return o;
    }

    ModelSpec spec() const {
        const auto need = [&](const std::optional<std::string>& v, const char* flag) {
            if (!v) throw UsageError("--model " + model + " requires " + flag);
            return parse_rational(*v);
        };
        const auto forbid = [&](bool given, const char* flag) {
            if (given) throw UsageError(std::string(flag) + " does not apply to --model " + model);
        };
        ModelSpec m;
        if (model == "eulerian") {
            forbid(p.has_value(), "--p");
            m = Eulerian{};
        } else if (model == "iid") {
            m = Iid{need(p, "--p")};
        } else if (model == "onepair") {
            m = OnePair{need(p, "--p")};
        } else if (model == "flipping") {
            m = Flipping{need(p, "--p")};
        } else if (model == "carries") {
            forbid(p.has_value(), "--p");
            m = Carries{b.value_or(10)};
        } else if (model == "non2bf") {
            forbid(p.has_value(), "--p");
            m = NonTwoBlock{need(alpha, "--alpha"), need(beta, "--beta")};
        } else {
            throw UsageError("unknown model '" + model + "'");
        }
        if (model != "carries") forbid(b.has_value(), "--b");
        if (model != "non2bf") {
            forbid(alpha.has_value(), "--alpha");
            forbid(beta.has_value(), "--beta");
        }
        validate(m, options());
        return m;
    }
};

Table dist_table(const ModelArgs& args, std::size_t n) {
    const ModelSpec m = args.spec();
    const Bgf b = bgf_from_zero_runs(zero_runs(m, n, args.options()));
    Table t{"dist", {{"model", describe(m)}, {"n", std::to_string(n)}}, {"n", "k", "probability"}, {}};
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= j; ++k)
            t.add_row({static_cast<std::int64_t>(j), static_cast<std::int64_t>(k), extract(b, k, j)});
    return t;
}

Table runs_table(const ModelArgs& args, std::size_t order, const std::string& kind) {
    const ModelSpec m = args.spec();
    const RunSeq r = kind == "zero" ? zero_runs(m, order, args.options()) : one_runs(m, order, args.options());
    Table t{"runs", {{"model", describe(m)}, {"n", std::to_string(order)}, {"kind", to_string(r.kind())}},
            {"kind", "n", "probability"}, {}};
    for (std::size_t j = 0; j <= order; ++j)
        t.add_row({std::string(to_string(r.kind())), static_cast<std::int64_t>(j), r[j]});
    return t;
}

Table kernel_table(const ModelArgs& args, int hi) {
    if (hi < -1) throw UsageError("--hi must be at least -1");
    const ModelSpec m = args.spec();
    const KernelBand kb = kernel_from_one_runs(one_runs(m, static_cast<std::size_t>(hi + 2), args.options()), hi);
    Table t{"kernel", {{"model", describe(m)}, {"hi", std::to_string(hi)}}, {"lag", "value"}, {}};
    for (int lag = -1; lag <= hi; ++lag) t.add_row({static_cast<std::int64_t>(lag), kb(lag)});
    return t;
}

std::set<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::set<std::pair<int, int>> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        std::size_t px = 0, py = 0;
        int x = 0, y = 0;
        bool ok = colon != std::string::npos;
        if (ok) {
            try {
                x = std::stoi(item.substr(0, colon), &px);
                y = std::stoi(item.substr(colon + 1), &py);
                ok = px == colon && py == item.size() - colon - 1;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) throw UsageError("--pairs expects x:y items separated by commas, got '" + item + "'");
        pairs.emplace(x, y);
    }
    return pairs;
}

Table enumerate_table(int alphabet, const std::optional<std::string>& pairs, bool descents, std::size_t n) {
    if (pairs.has_value() == descents) throw UsageError("give exactly one of --pairs and --descents");
    const PairSet ps = descents ? PairSet::descents(alphabet) : PairSet(alphabet, parse_pairs(*pairs));
    std::string listed;
    for (auto [x, y] : ps.pairs()) listed += (listed.empty() ? "" : ",") + std::to_string(x) + ":" + std::to_string(y);
    const CountTable table = pattern_count_table(ps, n);
    Table t{"enumerate", {{"alphabet", std::to_string(alphabet)}, {"pairs", listed}, {"n", std::to_string(n)}},
            {"n", "k", "count"}, {}};
    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t k = 0; k < len; ++k)
            t.add_row({static_cast<std::int64_t>(len), static_cast<std::int64_t>(k), table(len, k)});
    return t;
}

Table verify_table(const std::vector<CheckResult>& results, const std::string& suite, std::uint64_t seed) {
    Table t{"verify", {{"suite", suite}, {"seed", std::to_string(seed)}}, {"suite", "check", "passed", "detail"}, {}};
    for (const auto& r : results) t.add_row({r.suite, r.check, r.passed, r.detail});
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"Count distributions of stationary 1-dependent indicator processes"};
    app.require_subcommand(1);

    OutputArgs output;
    ModelArgs model;

    std::optional<std::size_t> n_opt;
    std::string kind = "zero";
    int hi = 10;
    int alphabet = 0;
    std::optional<std::string> pairs;
    bool descents = false;
    std::string suite = "all";
    std::uint64_t seed = VerifyOptions{}.seed;
    std::uint64_t trials = VerifyOptions{}.trials;

    auto* dist = app.add_subcommand("dist", "Table of P(S_j = k) for j <= n");
    model.attach(dist);
    output.attach(dist);
    dist->add_option("--n", n_opt, "Largest horizon")->required();

    auto* runs = app.add_subcommand("runs", "Zero-run or one-run probabilities");
    model.attach(runs);
    output.attach(runs);
    runs->add_option("--n", n_opt, "Largest run length (default: ONEDEP_ORDER or 20)");
    runs->add_option("--kind", kind, "zero or one")->check(CLI::IsMember({"zero", "one"}));

    auto* kernel = app.add_subcommand("kernel", "Stationary kernel values k(-1)..k(hi)");
    model.attach(kernel);
    output.attach(kernel);
    kernel->add_option("--hi", hi, "Largest lag");

    auto* enumerate = app.add_subcommand("enumerate", "Count strings by occurrences of adjacent pairs");
    output.attach(enumerate);
    enumerate->add_option("--alphabet", alphabet, "Alphabet size m; symbols are 0..m-1")->required();
    enumerate->add_option("--pairs", pairs, "Pairs in B, e.g. \"0:1,1:1\"");
    enumerate->add_flag("--descents", descents, "B = {(x, y) : x > y}");
    enumerate->add_option("--n", n_opt, "Largest string length")->required();

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    output.attach(verify);
    verify->add_option("--suite", suite, "all or a single suite name");
    verify->add_option("--seed", seed, "Seed for the Monte Carlo checks");
    verify->add_option("--trials", trials, "Monte Carlo trials per distribution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::size_t order = default_order();
    if (*dist) {
        output.emit(dist_table(model, *n_opt));
    } else if (*runs) {
        output.emit(runs_table(model, n_opt.value_or(order), kind));
    } else if (*kernel) {
        output.emit(kernel_table(model, hi));
    } else if (*enumerate) {
        output.emit(enumerate_table(alphabet, pairs, descents, *n_opt));
    } else if (*verify) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.order = order;
        opts.trials = trials;
        const auto results = run_verify(suite, opts);
        output.emit(verify_table(results, suite, seed));
        for (const auto& r : results)
            if (!r.passed) return kExitVerifyFailed;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const onedep::DepthExceeded& e) {
        std::cerr << "onedep: " << e.what() << "\n";
        return kExitDepth;
    } catch (const onedep::Error& e) {
        std::cerr << "onedep: " << e.what() << "\n";
        return kExitUsage;
    }
}
