#include "onedep/transforms.hpp"

#include <string>

namespace onedep {

namespace {

const RPoly& one_minus_z() {
    static const RPoly p{Rational(1), Rational(-1)};
    return p;
}

const RPoly& z_minus_one() {
    static const RPoly p{Rational(-1), Rational(1)};
    return p;
}

void require_valid(const RunSeq& r, RunKind expected, const char* where) {
    if (r.kind() != expected)
        throw ValidationError(std::string(where) + ": expected a " + to_string(expected) + " sequence");
    if (auto why = r.violation()) throw ValidationError(std::string(where) + ": " + *why);
}

/// B / (1 - c v B) for a z-polynomial c.
Bgf geometric_quotient(const Bgf& b, const RPoly& c) {
    const std::size_t n = b.order();
    const Bgf denominator = Bgf::one(n) - c * times_v(b);
    return multiply(b, inverse(denominator, n), n);
}

/// Drops the v^0 row, which must vanish.
Bgf divide_by_v(const Bgf& a) {
    if (!a.row(0).is_zero()) throw InternalInconsistency("divide_by_v: nonzero v^0 row");
    Bgf out(a.order() - 1);
    for (std::size_t n = 1; n <= a.order(); ++n) out.row(n - 1) = a.row(n);
    return out;
}

}  // namespace

Bgf bgf_from_zero_runs(const RunSeq& q) {
    require_valid(q, RunKind::zero_run, "bgf_from_zero_runs");
    return geometric_quotient(scale_substitute(q.series(), one_minus_z()), RPoly::z());
}

Bgf bgf_from_one_runs(const RunSeq& p) {
    require_valid(p, RunKind::one_run, "bgf_from_one_runs");
    return geometric_quotient(scale_substitute(p.series(), z_minus_one()), RPoly(Rational(1)));
}

RunSeq involution(const RunSeq& r, std::vector<NotOneDependentWarning>* warnings) {
    const USeries reflected = scale_argument(r.series(), Rational(-1));
    const USeries denominator = USeries::one(r.order()) - times_v(reflected);
    RunSeq out = RunSeq::formal(dual_kind(r.kind()), reflected * inverse(denominator));
    if (warnings) {
        if (auto why = out.violation())
            warnings->push_back({std::string("involution produced a ") + to_string(out.kind()) +
                                 " sequence no stationary 1-dependent process has: " + *why});
    }
    return out;
}

USeries shifted_involution(const USeries& shifted) {
    if (shifted[0] != 1) throw ShiftDomainError("shifted_involution: constant term is not 1");
    return inverse(scale_argument(shifted, Rational(-1)));
}

Bgf dual_bgf(const Bgf& q) { return dual(q); }

RPoly pgf_by_recursion(const RunSeq& q, std::size_t n) {
    require_valid(q, RunKind::zero_run, "pgf_by_recursion");
    if (n > q.order()) throw UsageError("pgf_by_recursion: n exceeds run sequence order");
    std::vector<RPoly> pow_one_minus_z{RPoly(Rational(1))};
    for (std::size_t j = 1; j <= n; ++j) pow_one_minus_z.push_back(pow_one_minus_z.back() * one_minus_z());

    std::vector<RPoly> pgf{RPoly(Rational(1))};
    for (std::size_t m = 1; m <= n; ++m) {
        RPoly acc = RPoly(q[m]) * pow_one_minus_z[m];
        for (std::size_t k = 1; k <= m; ++k)
            acc += RPoly(q[k - 1]) * pow_one_minus_z[k - 1] * RPoly::z() * pgf[m - k];
        pgf.push_back(std::move(acc));
    }
    return pgf[n];
}

Bgf bgf_exchangeable(const RunSeq& q) {
    require_valid(q, RunKind::zero_run, "bgf_exchangeable");
    const std::size_t n = q.order();
    const Bgf one_over_1_minus_zv = inverse(Bgf::one(n) - RPoly::z() * times_v(Bgf::one(n)), n);
    const Bgf argument = one_minus_z() * times_v(one_over_1_minus_zv);
    return multiply(compose(q.series(), argument, n), one_over_1_minus_zv, n);
}

Bgf bgf_renewal(const RunSeq& q) {
    require_valid(q, RunKind::zero_run, "bgf_renewal");
    const std::size_t n = q.order();
    const Bgf qc = Bgf::constant(q.series());
    const Bgf inner = Bgf::one(n) + times_v(qc) - qc;
    return multiply(qc, inverse(Bgf::one(n) - RPoly::z() * inner, n), n);
}

Bgf bgf_stationary_renewal(const RunSeq& q) {
    require_valid(q, RunKind::zero_run, "bgf_stationary_renewal");
    const std::size_t n = q.order();
    const Rational q1 = n >= 1 ? q[1] : Rational(1);

    // Numerator and denominator both vanish at v = 0; after dividing by v,
    // row m depends on q_{m+1} only through terms that cancel in the quotient,
    // so padding q with a zero at order n + 1 leaves rows 0..n exact.
    std::vector<Rational> padded = q.series().coeffs();
    padded.push_back(Rational(0));
    const std::size_t w = n + 1;
    const Bgf qc = Bgf::constant(USeries(w, std::move(padded)));
    const RPoly& z = RPoly::z();

    Bgf numerator_factor(w);
    numerator_factor.row(0) = z;
    numerator_factor.row(1) = RPoly(Rational(-1)) + RPoly(q1) * one_minus_z();
    Bgf numerator = multiply(numerator_factor, qc, w);
    numerator.row(0) -= z;

    Bgf v_minus_one_sq(w);
    v_minus_one_sq.row(0) = RPoly(Rational(1));
    v_minus_one_sq.row(1) = RPoly(Rational(-2));
    if (w >= 2) v_minus_one_sq.row(2) = RPoly(Rational(1));
    Bgf denominator = z * multiply(v_minus_one_sq, qc, w);
    denominator.row(0) -= z;
    denominator.row(1) += z + RPoly(q1 - 1) * one_minus_z();

    return multiply(divide_by_v(numerator), inverse(divide_by_v(denominator), n), n);
}

}  // namespace onedep
