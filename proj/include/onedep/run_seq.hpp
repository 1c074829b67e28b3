#pragma once

#include <optional>
#include <string>

#include "onedep/rational.hpp"
#include "onedep/series.hpp"

namespace onedep {

using USeries = Series<Rational>;
using RPoly = ZPoly<Rational>;
using Bgf = BSeries<Rational>;

enum class RunKind { zero_run, one_run };

inline RunKind dual_kind(RunKind k) {
    return k == RunKind::zero_run ? RunKind::one_run : RunKind::zero_run;
}

inline const char* to_string(RunKind k) { return k == RunKind::zero_run ? "zero-run" : "one-run"; }

/// Run probabilities q_n = P(X_1 = .. = X_n = 0) or p_n = P(X_1 = .. = X_n = 1).
///
/// Construction through checked() enforces: coefficient 0 is 1, every
/// coefficient lies in [0, 1], and the sequence is non-increasing. formal()
/// skips the checks; it exists for intermediate results of formal identities.
class RunSeq {
public:
    static RunSeq checked(RunKind kind, USeries series);
    static RunSeq formal(RunKind kind, USeries series) { return RunSeq(kind, std::move(series)); }

    RunKind kind() const { return kind_; }
    const USeries& series() const { return series_; }
    std::size_t order() const { return series_.order(); }
    const Rational& operator[](std::size_t n) const { return series_[n]; }

    /// First broken invariant, if any.
    std::optional<std::string> violation() const;
    bool valid() const { return !violation().has_value(); }

    friend bool operator==(const RunSeq& a, const RunSeq& b) {
        return a.kind_ == b.kind_ && a.series_ == b.series_;
    }

private:
    RunSeq(RunKind kind, USeries series) : kind_(kind), series_(std::move(series)) {}

    RunKind kind_;
    USeries series_;
};

}  // namespace onedep
