#pragma once

// Determinantal representation of stationary 1-dependent processes: kernel,
// correlation functions, string probabilities and determinant pgfs.

#include <vector>

#include "onedep/determinant.hpp"
#include "onedep/run_seq.hpp"

namespace onedep {

/// Stationary kernel K(x, y) = k(y - x) for lags -1..hi; k(-1) = -1 and
/// k(m) = 0 for m <= -2.
class KernelBand {
public:
    KernelBand(int hi, std::vector<Rational> values);

    int hi() const { return hi_; }
    /// k(lag); UsageError beyond hi.
    Rational operator()(int lag) const;
    const std::vector<Rational>& values() const { return values_; }

private:
    int hi_;
    std::vector<Rational> values_;
};

/// One-run probabilities with p_{-1} = p_0 = 1 and p_m = 0 for m < -1.
class ExtendedOneRuns {
public:
    explicit ExtendedOneRuns(RunSeq p);

    Rational operator[](int m) const;
    std::size_t order() const { return p_.order(); }
    const RunSeq& runs() const { return p_; }

private:
    RunSeq p_;
};

/// k(n) = -[v^{n+1}] 1/P(v). Requires hi + 2 <= p.order().
KernelBand kernel_from_one_runs(const RunSeq& p, int hi);

/// Alternating sum over chains x = l_0 < .. < l_r = y + 1 of products of
/// interval weights p_{l_k - l_{k-1}}. Cost 2^{y - x}.
Rational kernel_direct(const RunSeq& p, int x, int y);

/// det(k(b - a))_{a, b in points}; points sorted ascending.
Rational correlation(const KernelBand& kb, const std::vector<int>& points);

/// P(X_i = 0 exactly for i in zeros), zeros sorted within 1..n.
Rational string_probability(const ExtendedOneRuns& p, std::size_t n, const std::vector<std::size_t>& zeros);

/// E prod z_i^{X_i}: determinant with sub-diagonal entries 1 - z_j.
Rational multivariate_pgf(const ExtendedOneRuns& p, std::size_t n, const std::vector<Rational>& zvals);

/// Q_{S_n}(z) = det(p^_{j-i}) with p^_{-1} = 1 - z, over Q[z].
RPoly pgf_determinant(const ExtendedOneRuns& p, std::size_t n);

/// Q_{S_n}(z) = det(I + (z - 1) K) over the n x n window.
RPoly pgf_fredholm(const KernelBand& kb, std::size_t n);

/// The (n+1) x (n+1) matrix behind pgf_determinant.
Matrix<RPoly> pgf_matrix(const ExtendedOneRuns& p, std::size_t n);

}  // namespace onedep
