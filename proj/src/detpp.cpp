#include "onedep/detpp.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace onedep {

namespace {

void require_sorted_within(const std::vector<std::size_t>& zeros, std::size_t n) {
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (zeros[i] < 1 || zeros[i] > n) throw UsageError("zero position outside 1..n");
        if (i > 0 && zeros[i] <= zeros[i - 1]) throw UsageError("zero positions must be strictly increasing");
    }
}

void require_order(const ExtendedOneRuns& p, std::size_t n, const char* where) {
    if (p.order() < n)
        throw UsageError(std::string(where) + ": needs one-run probabilities up to p_" + std::to_string(n));
}

}  // namespace

KernelBand::KernelBand(int hi, std::vector<Rational> values) : hi_(hi), values_(std::move(values)) {
    if (hi_ < -1 || values_.size() != static_cast<std::size_t>(hi_ + 2))
        throw UsageError("KernelBand: expected values for lags -1..hi");
    if (values_.front() != -1) throw ValidationError("KernelBand: k(-1) must be -1");
}

Rational KernelBand::operator()(int lag) const {
    if (lag < -1) return Rational(0);
    if (lag > hi_) throw UsageError("KernelBand: lag " + std::to_string(lag) + " beyond hi = " + std::to_string(hi_));
    return values_[static_cast<std::size_t>(lag + 1)];
}

ExtendedOneRuns::ExtendedOneRuns(RunSeq p) : p_(std::move(p)) {
    if (p_.kind() != RunKind::one_run) throw ValidationError("ExtendedOneRuns: expected a one-run sequence");
    if (p_[0] != 1) throw ValidationError("ExtendedOneRuns: p_0 must be 1");
}

Rational ExtendedOneRuns::operator[](int m) const {
    if (m < -1) return Rational(0);
    if (m <= 0) return Rational(1);
    if (static_cast<std::size_t>(m) > p_.order())
        throw UsageError("ExtendedOneRuns: p_" + std::to_string(m) + " beyond available order");
    return p_[static_cast<std::size_t>(m)];
}

KernelBand kernel_from_one_runs(const RunSeq& p, int hi) {
    if (p.kind() != RunKind::one_run) throw ValidationError("kernel_from_one_runs: expected a one-run sequence");
    if (hi < -1 || static_cast<std::size_t>(hi + 2) > p.order())
        throw UsageError("kernel_from_one_runs: requires -1 <= hi and hi + 2 <= order");
    const USeries reciprocal = inverse(p.series());
    std::vector<Rational> values;
    for (int lag = -1; lag <= hi; ++lag) values.push_back(-reciprocal[static_cast<std::size_t>(lag + 1)]);
    return KernelBand(hi, std::move(values));
}

Rational kernel_direct(const RunSeq& p, int x, int y) {
    if (p.kind() != RunKind::one_run) throw ValidationError("kernel_direct: expected a one-run sequence");
    if (x == y + 1) return Rational(-1);
    if (x > y + 1) return Rational(0);
    const int span = y - x;
    if (static_cast<std::size_t>(span + 1) > p.order()) throw UsageError("kernel_direct: lag beyond run order");
    if (span > 24) throw UsageError("kernel_direct: lag too large for chain enumeration");

    // Each subset of the interior points x+1..y is one chain.
    Rational acc(0);
    for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
        Rational product(1);
        int previous = x;
        int links = 0;
        for (int i = 0; i <= span; ++i) {
            const bool cut = i == span || (mask >> i) & 1u;
            if (!cut) continue;
            const int point = i == span ? y + 1 : x + 1 + i;
            product *= p[static_cast<std::size_t>(point - previous)];
            previous = point;
            ++links;
        }
        if (links % 2 == 1)
            acc += product;
        else
            acc -= product;
    }
    return acc;
}

Rational correlation(const KernelBand& kb, const std::vector<int>& points) {
    if (!std::is_sorted(points.begin(), points.end()) ||
        std::adjacent_find(points.begin(), points.end()) != points.end())
        throw UsageError("correlation: points must be strictly increasing");
    if (points.empty()) return Rational(1);
    if (points.back() - points.front() > kb.hi()) throw UsageError("correlation: point range exceeds kernel band");
    const auto size = static_cast<Eigen::Index>(points.size());
    Matrix<Rational> k(size, size);
    for (Eigen::Index a = 0; a < size; ++a)
        for (Eigen::Index b = 0; b < size; ++b) k(a, b) = kb(points[b] - points[a]);
    return determinant_bareiss(k);
}

Rational string_probability(const ExtendedOneRuns& p, std::size_t n, const std::vector<std::size_t>& zeros) {
    require_sorted_within(zeros, n);
    require_order(p, n, "string_probability");
    std::vector<long> w{0};
    for (auto z : zeros) w.push_back(static_cast<long>(z));
    w.push_back(static_cast<long>(n) + 1);
    const auto size = static_cast<Eigen::Index>(zeros.size() + 1);
    Matrix<Rational> m(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) m(i, j) = p[static_cast<int>(w[j + 1] - w[i] - 1)];
    return determinant_bareiss(m);
}

Rational multivariate_pgf(const ExtendedOneRuns& p, std::size_t n, const std::vector<Rational>& zvals) {
    if (zvals.size() != n) throw UsageError("multivariate_pgf: expected one z value per position");
    require_order(p, n, "multivariate_pgf");
    const auto size = static_cast<Eigen::Index>(n + 1);
    Matrix<Rational> g(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            g(i, j) = i - j == 1 ? Rational(1 - zvals[static_cast<std::size_t>(j)]) : p[static_cast<int>(j - i)];
    return determinant_bareiss(g);
}

Matrix<RPoly> pgf_matrix(const ExtendedOneRuns& p, std::size_t n) {
    require_order(p, n, "pgf_determinant");
    const auto size = static_cast<Eigen::Index>(n + 1);
    Matrix<RPoly> m(size, size);
    const RPoly one_minus_z{Rational(1), Rational(-1)};
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            m(i, j) = j - i == -1 ? one_minus_z : RPoly(p[static_cast<int>(j - i)]);
    return m;
}

RPoly pgf_determinant(const ExtendedOneRuns& p, std::size_t n) { return determinant_bareiss(pgf_matrix(p, n)); }

RPoly pgf_fredholm(const KernelBand& kb, std::size_t n) {
    if (n == 0) return RPoly(Rational(1));
    if (kb.hi() < static_cast<int>(n) - 1) throw UsageError("pgf_fredholm: kernel band shorter than n - 1");
    const auto size = static_cast<Eigen::Index>(n);
    const RPoly z_minus_one{Rational(-1), Rational(1)};
    Matrix<RPoly> m(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) {
            RPoly entry = z_minus_one * RPoly(kb(static_cast<int>(j - i)));
            if (i == j) entry += RPoly(Rational(1));
            m(i, j) = entry;
        }
    return determinant_bareiss(m);
}

}  // namespace onedep
