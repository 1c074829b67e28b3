#pragma once

// Counting strings over a finite alphabet by occurrences of adjacent pairs in B.

#include <vector>

#include "onedep/pair_set.hpp"
#include "onedep/run_seq.hpp"

namespace onedep {

/// f(n, k): number of length-n strings with exactly k adjacent pairs in B,
/// for 1 <= n <= N and 0 <= k < n.
class CountTable {
public:
    CountTable(int alphabet, std::vector<std::vector<Integer>> rows);

    int alphabet() const { return m_; }
    std::size_t max_length() const { return rows_.size() - 1; }
    /// Zero outside 0 <= k < n.
    Integer operator()(std::size_t n, std::size_t k) const;
    const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }

private:
    int m_;
    std::vector<std::vector<Integer>> rows_;
};

/// m_0 = 1 and m_k = number of B-strings of length k, by transfer-matrix powering.
std::vector<Integer> bstring_counts(const PairSet& ps, std::size_t max_length);

/// sum_k m_k v^k.
USeries bstring_gf(const std::vector<Integer>& counts);

/// Coefficients of (z-1)/(z - G((z-1)v)). Throws InternalInconsistency if an
/// entry comes out negative or non-integral.
CountTable pattern_count_table(const PairSet& ps, std::size_t max_length);

/// [x^m y^n] 1/(1 - (a + x) y + y^2): strings over {0..a-1} of length n + m
/// with exactly m occurrences of "01". Requires a >= 2.
Integer florez_count(int a, std::size_t n, std::size_t m);

}  // namespace onedep
