#include "onedep/enumerate.hpp"

#include <Eigen/Core>

#include "onedep/determinant.hpp"

namespace onedep {

CountTable::CountTable(int alphabet, std::vector<std::vector<Integer>> rows) : m_(alphabet), rows_(std::move(rows)) {
    if (rows_.empty()) throw UsageError("CountTable: needs at least the empty row for n = 0");
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n) throw UsageError("CountTable: row n must hold n entries");
}

Integer CountTable::operator()(std::size_t n, std::size_t k) const {
    if (n >= rows_.size()) throw UsageError("CountTable: n beyond table");
    return k < n ? rows_[n][k] : Integer(0);
}

std::vector<Integer> bstring_counts(const PairSet& ps, std::size_t max_length) {
    const int m = ps.alphabet();
    Matrix<Integer> adjacency = Matrix<Integer>::Zero(m, m);
    for (auto [x, y] : ps.pairs()) adjacency(x, y) = 1;

    std::vector<Integer> counts{Integer(1)};
    // ending[y] = number of B-strings of the current length ending in y.
    Eigen::Matrix<Integer, Eigen::Dynamic, 1> ending = Eigen::Matrix<Integer, Eigen::Dynamic, 1>::Ones(m);
    for (std::size_t k = 1; k <= max_length; ++k) {
        if (k > 1) ending = adjacency.transpose() * ending;
        counts.push_back(ending.sum());
    }
    return counts;
}

USeries bstring_gf(const std::vector<Integer>& counts) {
    if (counts.empty()) throw UsageError("bstring_gf: empty count list");
    USeries g(counts.size() - 1);
    for (std::size_t k = 0; k < counts.size(); ++k) g[k] = Rational(counts[k]);
    return g;
}

CountTable pattern_count_table(const PairSet& ps, std::size_t max_length) {
    if (max_length < 1) throw UsageError("pattern_count_table: max_length must be at least 1");
    const std::size_t order = max_length;
    const std::vector<Integer> counts = bstring_counts(ps, order);

    // z - G((z-1)v) = (z-1)(1 - sum_k m_k (z-1)^{k-1} v^k), so the target is
    // the reciprocal of the second factor.
    const RPoly z_minus_one{Rational(-1), Rational(1)};
    Bgf denominator = Bgf::one(order);
    RPoly power(Rational(1));
    for (std::size_t k = 1; k <= order; ++k) {
        denominator.row(k) = -(RPoly(Rational(counts[k])) * power);
        power *= z_minus_one;
    }
    const Bgf table = inverse(denominator, order);

    std::vector<std::vector<Integer>> rows(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        const RPoly& row = table.row(n);
        if (row.degree() >= static_cast<std::ptrdiff_t>(n))
            throw InternalInconsistency("pattern_count_table: row " + std::to_string(n) + " has degree >= n");
        for (std::size_t k = 0; k < n; ++k) {
            const Rational c = row[k];
            if (!is_integer(c) || c < 0)
                throw InternalInconsistency("pattern_count_table: f(" + std::to_string(n) + ", " +
                                            std::to_string(k) + ") = " + to_string(c));
            rows[n].push_back(numerator(c));
        }
    }
    return CountTable(ps.alphabet(), std::move(rows));
}

Integer florez_count(int a, std::size_t n, std::size_t m) {
    if (a < 2) throw UsageError("florez_count: a must be at least 2");
    using IPoly = ZPoly<Integer>;
    std::vector<IPoly> rows{IPoly(Integer(1)), IPoly{Integer(-a), Integer(-1)}, IPoly(Integer(1))};
    rows.resize(std::min<std::size_t>(rows.size(), n + 1));
    const BSeries<Integer> denominator(n, std::move(rows));
    return extract(inverse(denominator, m), m, n);
}

}  // namespace onedep
