#pragma once

// Run probabilities -> bivariate generating functions of the count S_n, for
// stationary 1-dependent indicator processes and for the exchangeable,
// renewal and stationary-renewal readings of the same zero-run sequence.
//
// All bgfs are returned at the order of the input run sequence with the
// z-degree cap equal to that order.

#include <vector>

#include "onedep/errors.hpp"
#include "onedep/run_seq.hpp"

namespace onedep {

/// Q(z, v) = Q((1-z)v) / (1 - z v Q((1-z)v)).
Bgf bgf_from_zero_runs(const RunSeq& q);

/// Q(z, v) = P(-(1-z)v) / (1 - v P(-(1-z)v)).
Bgf bgf_from_one_runs(const RunSeq& p);

/// Q(v) = P(-v)/(1 - v P(-v)) and symmetrically. Never throws on
/// unrealizable output; instead appends to `warnings` when given.
RunSeq involution(const RunSeq& r, std::vector<NotOneDependentWarning>* warnings = nullptr);

/// Shifted form: r~(v) -> 1 / r~(-v). Requires a constant term of 1.
USeries shifted_involution(const USeries& shifted);

/// Q(1/z, z v): the bgf of the complementary indicators.
Bgf dual_bgf(const Bgf& q);

/// Q_{S_n}(z) by conditioning on the first z-mark:
///   Q_n = (1-z)^n q_n + sum_{k=1..n} (1-z)^{k-1} z q_{k-1} Q_{n-k}.
RPoly pgf_by_recursion(const RunSeq& q, std::size_t n);

/// Exchangeable sequence with the given zero runs: Q((1-z)v/(1-zv)) / (1-zv).
Bgf bgf_exchangeable(const RunSeq& q);

/// Renewal conditional on X_0 = 1: Q(v) / (1 - z(1 + (v-1)Q(v))).
Bgf bgf_renewal(const RunSeq& q);

/// Stationary renewal; Q'(0) is read as q_1. Throws NonInvertibleSeries when
/// q_1 = 1 (the formula degenerates for the all-zeros process).
Bgf bgf_stationary_renewal(const RunSeq& q);

}  // namespace onedep
