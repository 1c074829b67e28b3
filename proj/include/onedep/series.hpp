#pragma once

// Truncated formal power series in one variable (v) and two variables (z, v).
//
// Series<S>  : a(v) = sum_{j<=N} a_j v^j, arithmetic modulo v^{N+1}.
// ZPoly<S>   : a polynomial in z, always kept canonical (no trailing zeros).
// BSeries<S> : sum_{n<=N} A_n(z) v^n with one ZPoly per power of v.
//
// Bivariate products and reciprocals are computed in (S[z] / z^{D+1})[[v]] / v^{N+1}
// where D is the z-degree cap (default: D = N). Truncation in z is a ring
// homomorphism, so any coefficient of z-degree <= D in the result is exact.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "onedep/errors.hpp"

namespace onedep {

template <class Scalar>
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const Scalar& c) : coeffs_{c} { trim(); }
    ZPoly(std::initializer_list<Scalar> c) : coeffs_(c) { trim(); }
    explicit ZPoly(std::vector<Scalar> c) : coeffs_(std::move(c)) { trim(); }

    static ZPoly monomial(const Scalar& c, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = c;
        return ZPoly(std::move(v));
    }
    static ZPoly z() { return monomial(Scalar(1), 1); }

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar operator()(const Scalar& z) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    ZPoly truncated(std::size_t max_degree) const {
        if (coeffs_.size() <= max_degree + 1) return *this;
        return ZPoly(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
    }

    /// z^n p(1/z). Requires degree() <= n.
    ZPoly reversed(std::size_t n) const {
        if (degree() > static_cast<std::ptrdiff_t>(n))
            throw UsageError("ZPoly::reversed: degree exceeds reversal length");
        std::vector<Scalar> v(n + 1, Scalar(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) v[n - k] = coeffs_[k];
        return ZPoly(std::move(v));
    }

    ZPoly& operator+=(const ZPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    ZPoly& operator*=(const ZPoly& o) { return *this = mul_capped(*this, o, npos); }

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) { return mul_capped(a, b, npos); }
    friend ZPoly operator-(ZPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Product with every term of z-degree > cap dropped.
    static ZPoly mul_capped(const ZPoly& a, const ZPoly& b, std::size_t cap) {
        if (a.is_zero() || b.is_zero()) return {};
        const std::size_t len = std::min(a.coeffs_.size() + b.coeffs_.size() - 1,
                                         cap == npos ? npos : cap + 1);
        std::vector<Scalar> out(len, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return ZPoly(std::move(out));
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

template <class Scalar>
ZPoly<Scalar> pow(const ZPoly<Scalar>& base, std::size_t e) {
    ZPoly<Scalar> acc(Scalar(1));
    for (std::size_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

/// Euclidean division over a field of coefficients.
template <class Scalar>
std::pair<ZPoly<Scalar>, ZPoly<Scalar>> divmod(const ZPoly<Scalar>& num, const ZPoly<Scalar>& den) {
    if (den.is_zero()) throw NonInvertibleSeries("ZPoly division by zero");
    std::vector<Scalar> rem = num.coeffs();
    const auto dd = static_cast<std::size_t>(den.degree());
    if (rem.size() <= dd) return {ZPoly<Scalar>(), num};
    std::vector<Scalar> quot(rem.size() - dd, Scalar(0));
    const Scalar lead = den.coeffs().back();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == 0) continue;
        const Scalar c = rem[k] / lead;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coeffs()[j];
    }
    return {ZPoly<Scalar>(std::move(quot)), ZPoly<Scalar>(std::move(rem))};
}

/// Division known to be exact (as in fraction-free elimination).
template <class Scalar>
ZPoly<Scalar> operator/(const ZPoly<Scalar>& num, const ZPoly<Scalar>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InternalInconsistency("ZPoly: inexact division");
    return q;
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const ZPoly<Scalar>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        if (!first) os << " + ";
        os << "(" << p.coeffs()[k] << ")";
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    return os;
}

template <class Scalar>
class Series {
public:
    explicit Series(std::size_t order = 0) : coeffs_(order + 1, Scalar(0)) {}

    /// Missing high coefficients are zero; passing more than order + 1 is an error.
    Series(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1) throw UsageError("Series: more coefficients than order + 1");
        coeffs_.resize(order + 1, Scalar(0));
    }

    static Series one(std::size_t order) { return Series(order, {Scalar(1)}); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Scalar& operator[](std::size_t j) const { return coeffs_.at(j); }
    Scalar& operator[](std::size_t j) { return coeffs_.at(j); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Series truncated(std::size_t order) const {
        if (order > this->order()) throw UsageError("Series::truncated: cannot extend order");
        return Series(order, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

namespace detail {
inline void require_same_order(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw UsageError(std::string(what) + ": truncation order mismatch");
}
}  // namespace detail

template <class Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) {
    detail::require_same_order(a.order(), b.order(), "Series +");
    Series<Scalar> out(a.order());
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] = a[j] + b[j];
    return out;
}

template <class Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) {
    detail::require_same_order(a.order(), b.order(), "Series -");
    Series<Scalar> out(a.order());
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] = a[j] - b[j];
    return out;
}

template <class Scalar>
Series<Scalar> operator*(const Scalar& c, const Series<Scalar>& a) {
    Series<Scalar> out(a.order());
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] = c * a[j];
    return out;
}

/// Cauchy product truncated to the common order.
template <class Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) {
    detail::require_same_order(a.order(), b.order(), "Series *");
    const std::size_t n = a.order();
    Series<Scalar> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Reciprocal via b_0 = 1/a_0, b_n = -(1/a_0) sum_{j=1..n} a_j b_{n-j}.
template <class Scalar>
Series<Scalar> inverse(const Series<Scalar>& a) {
    if (a[0] == 0) throw NonInvertibleSeries("Series inverse: zero constant term");
    const std::size_t n = a.order();
    const Scalar inv0 = Scalar(1) / a[0];
    Series<Scalar> b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -inv0 * acc;
    }
    return b;
}

/// a(c v).
template <class Scalar>
Series<Scalar> scale_argument(const Series<Scalar>& a, const Scalar& c) {
    Series<Scalar> out(a.order());
    Scalar cj(1);
    for (std::size_t j = 0; j <= a.order(); ++j) {
        out[j] = a[j] * cj;
        cj *= c;
    }
    return out;
}

/// v a(v), same order (the top coefficient of a is dropped).
template <class Scalar>
Series<Scalar> times_v(const Series<Scalar>& a) {
    Series<Scalar> out(a.order());
    for (std::size_t j = 1; j <= a.order(); ++j) out[j] = a[j - 1];
    return out;
}

/// 1 + v a(v); the order grows by one.
template <class Scalar>
Series<Scalar> shift(const Series<Scalar>& a) {
    Series<Scalar> out(a.order() + 1);
    out[0] = Scalar(1);
    for (std::size_t j = 0; j <= a.order(); ++j) out[j + 1] = a[j];
    return out;
}

/// Inverse of shift; the order shrinks by one.
template <class Scalar>
Series<Scalar> unshift(const Series<Scalar>& a) {
    if (a[0] != 1) throw ShiftDomainError("unshift: constant term is not 1");
    if (a.order() == 0) throw ShiftDomainError("unshift: order 0 series has nothing to unshift");
    Series<Scalar> out(a.order() - 1);
    for (std::size_t j = 0; j < a.order(); ++j) out[j] = a[j + 1];
    return out;
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Series<Scalar>& a) {
    os << "[";
    for (std::size_t j = 0; j <= a.order(); ++j) os << (j ? ", " : "") << a[j];
    return os << "]";
}

template <class Scalar>
class BSeries {
public:
    using Poly = ZPoly<Scalar>;

    explicit BSeries(std::size_t order = 0) : rows_(order + 1) {}
    BSeries(std::size_t order, std::vector<Poly> rows) : rows_(std::move(rows)) {
        if (rows_.size() > order + 1) throw UsageError("BSeries: more rows than order + 1");
        rows_.resize(order + 1);
    }

    /// Rows are the constant polynomials a_n.
    static BSeries constant(const Series<Scalar>& a) {
        BSeries out(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) out.rows_[n] = Poly(a[n]);
        return out;
    }
    static BSeries one(std::size_t order) { return BSeries(order, {Poly(Scalar(1))}); }

    std::size_t order() const { return rows_.size() - 1; }
    const Poly& row(std::size_t n) const { return rows_.at(n); }
    Poly& row(std::size_t n) { return rows_.at(n); }
    const std::vector<Poly>& rows() const { return rows_; }

    BSeries truncated(std::size_t order) const {
        if (order > this->order()) throw UsageError("BSeries::truncated: cannot extend order");
        return BSeries(order, std::vector<Poly>(rows_.begin(), rows_.begin() + order + 1));
    }

    friend bool operator==(const BSeries& a, const BSeries& b) { return a.rows_ == b.rows_; }

private:
    std::vector<Poly> rows_;
};

template <class Scalar>
BSeries<Scalar> operator+(const BSeries<Scalar>& a, const BSeries<Scalar>& b) {
    detail::require_same_order(a.order(), b.order(), "BSeries +");
    BSeries<Scalar> out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out.row(n) = a.row(n) + b.row(n);
    return out;
}

template <class Scalar>
BSeries<Scalar> operator-(const BSeries<Scalar>& a, const BSeries<Scalar>& b) {
    detail::require_same_order(a.order(), b.order(), "BSeries -");
    BSeries<Scalar> out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out.row(n) = a.row(n) - b.row(n);
    return out;
}

/// Every row multiplied by the same z-polynomial.
template <class Scalar>
BSeries<Scalar> operator*(const ZPoly<Scalar>& c, const BSeries<Scalar>& a) {
    BSeries<Scalar> out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out.row(n) = c * a.row(n);
    return out;
}

template <class Scalar>
BSeries<Scalar> multiply(const BSeries<Scalar>& a, const BSeries<Scalar>& b, std::size_t zcap) {
    detail::require_same_order(a.order(), b.order(), "BSeries *");
    const std::size_t n = a.order();
    BSeries<Scalar> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.row(i).is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out.row(i + j) += ZPoly<Scalar>::mul_capped(a.row(i), b.row(j), zcap);
    }
    return out;
}

template <class Scalar>
BSeries<Scalar> operator*(const BSeries<Scalar>& a, const BSeries<Scalar>& b) {
    return multiply(a, b, a.order());
}

/// Reciprocal of a constant-term-nonzero z-polynomial as a power series mod z^{cap+1}.
template <class Scalar>
ZPoly<Scalar> inverse_mod_z(const ZPoly<Scalar>& a, std::size_t cap) {
    if (a[0] == 0) throw NonInvertibleSeries("BSeries inverse: leading row has zero constant term");
    const Scalar inv0 = Scalar(1) / a[0];
    std::vector<Scalar> b(cap + 1, Scalar(0));
    b[0] = inv0;
    for (std::size_t k = 1; k <= cap; ++k) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(a.degree()); ++j)
            acc += a[j] * b[k - j];
        b[k] = -inv0 * acc;
    }
    return ZPoly<Scalar>(std::move(b));
}

template <class Scalar>
BSeries<Scalar> inverse(const BSeries<Scalar>& a, std::size_t zcap) {
    const std::size_t n = a.order();
    const ZPoly<Scalar> c = inverse_mod_z(a.row(0), zcap);
    BSeries<Scalar> b(n);
    b.row(0) = c;
    for (std::size_t k = 1; k <= n; ++k) {
        ZPoly<Scalar> acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.row(j).is_zero()) continue;
            acc += ZPoly<Scalar>::mul_capped(a.row(j), b.row(k - j), zcap);
        }
        b.row(k) = -ZPoly<Scalar>::mul_capped(c, acc, zcap);
    }
    return b;
}

template <class Scalar>
BSeries<Scalar> inverse(const BSeries<Scalar>& a) {
    return inverse(a, a.order());
}

/// q(s(z) v): row j is q_j s(z)^j.
template <class Scalar>
BSeries<Scalar> scale_substitute(const Series<Scalar>& q, const ZPoly<Scalar>& s) {
    BSeries<Scalar> out(q.order());
    ZPoly<Scalar> sj(Scalar(1));
    for (std::size_t j = 0; j <= q.order(); ++j) {
        out.row(j) = ZPoly<Scalar>(q[j]) * sj;
        sj *= s;
    }
    return out;
}

/// q(arg(z, v)) by Horner's rule; arg must have no v^0 term.
/// The result has order min(q.order(), arg.order()).
template <class Scalar>
BSeries<Scalar> compose(const Series<Scalar>& q, const BSeries<Scalar>& arg, std::size_t zcap) {
    if (!arg.row(0).is_zero())
        throw CompositionDomainError("compose: argument has a nonzero v^0 term");
    const std::size_t n = std::min(q.order(), arg.order());
    const BSeries<Scalar> x = arg.truncated(n);
    BSeries<Scalar> acc(n);
    acc.row(0) = ZPoly<Scalar>(q[n]);
    for (std::size_t j = n; j-- > 0;) {
        acc = multiply(x, acc, zcap);
        acc.row(0) += ZPoly<Scalar>(q[j]);
    }
    return acc;
}

template <class Scalar>
BSeries<Scalar> compose(const Series<Scalar>& q, const BSeries<Scalar>& arg) {
    return compose(q, arg, std::min(q.order(), arg.order()));
}

/// [z^k v^n] Q.
template <class Scalar>
Scalar extract(const BSeries<Scalar>& q, std::size_t k, std::size_t n) {
    if (n > q.order()) throw UsageError("extract: n exceeds truncation order");
    return q.row(n)[k];
}

/// v Q(z, v), same order.
template <class Scalar>
BSeries<Scalar> times_v(const BSeries<Scalar>& a) {
    BSeries<Scalar> out(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) out.row(n) = a.row(n - 1);
    return out;
}

/// 1 + v Q(z, v); the order grows by one.
template <class Scalar>
BSeries<Scalar> shift(const BSeries<Scalar>& a) {
    BSeries<Scalar> out(a.order() + 1);
    out.row(0) = ZPoly<Scalar>(Scalar(1));
    for (std::size_t n = 0; n <= a.order(); ++n) out.row(n + 1) = a.row(n);
    return out;
}

template <class Scalar>
BSeries<Scalar> unshift(const BSeries<Scalar>& a) {
    if (!(a.row(0) == ZPoly<Scalar>(Scalar(1)))) throw ShiftDomainError("unshift: v^0 row is not 1");
    if (a.order() == 0) throw ShiftDomainError("unshift: order 0 series has nothing to unshift");
    BSeries<Scalar> out(a.order() - 1);
    for (std::size_t n = 0; n < a.order(); ++n) out.row(n) = a.row(n + 1);
    return out;
}

/// Q(1/z, z v): row n reversed in z. Requires deg row(n) <= n.
template <class Scalar>
BSeries<Scalar> dual(const BSeries<Scalar>& a) {
    BSeries<Scalar> out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out.row(n) = a.row(n).reversed(n);
    return out;
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const BSeries<Scalar>& a) {
    for (std::size_t n = 0; n <= a.order(); ++n) os << "v^" << n << ": " << a.row(n) << "\n";
    return os;
}

}  // namespace onedep
