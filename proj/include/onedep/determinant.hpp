#pragma once

// Exact determinants of dense Eigen matrices over a commutative ring with
// exact division (Rational, Integer, ZPoly<Rational>).

#include <cstddef>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "onedep/rational.hpp"
#include "onedep/series.hpp"

namespace Eigen {

template <class Scalar>
struct NumTraits<onedep::ZPoly<Scalar>> : GenericNumTraits<onedep::ZPoly<Scalar>> {
    using Real = onedep::ZPoly<Scalar>;
    using NonInteger = onedep::ZPoly<Scalar>;
    using Literal = onedep::ZPoly<Scalar>;
    using Nested = onedep::ZPoly<Scalar>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 200
    };
};

}  // namespace Eigen

namespace onedep {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {
template <class Scalar>
bool is_zero(const Scalar& s) { return s == 0; }
template <class Scalar>
bool is_zero(const ZPoly<Scalar>& p) { return p.is_zero(); }
}  // namespace detail

/// Bareiss fraction-free elimination. Every division is exact, so the
/// entries stay in the ring generated by the input entries. Rows are swapped
/// only when a pivot vanishes.
template <class Derived>
typename Derived::Scalar determinant_bareiss(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw UsageError("determinant: matrix is not square");
    const Eigen::Index n = input.rows();
    if (n == 0) return Scalar(1);
    Matrix<Scalar> m = input;
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (detail::is_zero(m(k, k))) {
            Eigen::Index swap_row = k + 1;
            while (swap_row < n && detail::is_zero(m(swap_row, k))) ++swap_row;
            if (swap_row == n) return Scalar(0);
            m.row(k).swap(m.row(swap_row));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / previous;
            }
            m(i, k) = Scalar(0);
        }
        previous = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Cofactor expansion along the last column. Exponential cost; for small
/// matrices and as an independent check of determinant_bareiss.
template <class Derived>
typename Derived::Scalar determinant_laplace(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw UsageError("determinant: matrix is not square");
    const Eigen::Index n = input.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return input(0, 0);
    const Eigen::Index last = n - 1;
    Scalar acc(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (detail::is_zero(input(i, last))) continue;
        Matrix<Scalar> minor(n - 1, n - 1);
        for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (Eigen::Index c = 0; c < last; ++c) minor(mr, c) = input(r, c);
            ++mr;
        }
        Scalar term = input(i, last) * determinant_laplace(minor);
        if ((i + last) % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

}  // namespace onedep
