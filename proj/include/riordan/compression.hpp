#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riordan/multi_almost.hpp"

namespace riordan {

/// Hat series of a compressed array. Compression removes the stride
/// checkerboard, so the hat series carry no stride certificates:
/// bhat, ghat keep every stride-0 coefficient, fhat_j(t) collects the
/// coefficients of f_j as sum_k f_{j, ell k + 1} t^(k+1).
struct HatSpec {
    Index ell;
    Series b, g;
    std::vector<Series> f;

    HatSpec(Index ell_, Series b_, Series g_, std::vector<Series> f_)
        : ell(ell_), b(std::move(b_)), g(std::move(g_)), f(std::move(f_)) {
        if (ell < 1) throw StrideViolationError("stride must be at least 1");
        if (b[0] == 0 || g[0] == 0) throw OrderError("hat spec needs b(0) != 0 and g(0) != 0");
        if (static_cast<Index>(f.size()) != ell)
            throw StrideMismatchError("expected exactly ell hat multipliers");
        for (const auto& fj : f)
            if (fj.precision() < 1 || fj[0] != 0 || fj[1] == 0)
                throw OrderError("every hat multiplier must have order exactly 1");
    }

    Index precision() const {
        Index n = std::min(b.precision(), g.precision());
        for (const auto& fj : f) n = std::min(n, fj.precision());
        return n;
    }
};

inline HatSpec hat_series(const MultiAlmostSpec& spec) {
    std::vector<Series> f;
    f.reserve(spec.f.size());
    for (const auto& fj : spec.f) f.push_back(times_t(decimate(fj.series(), spec.ell, 1)));
    return HatSpec(spec.ell, decimate(spec.b.series(), spec.ell, 0), decimate(spec.g.series(), spec.ell, 0),
                   std::move(f));
}

/// Index-map compression: entry (n, k) of the result is entry
/// (ell*n - (ell-1)*k, k) of the source.
inline Mat compress(const Mat& source, Index ell, Index rows) {
    if (ell < 1) throw StrideViolationError("stride must be at least 1");
    if (source.rows() < ell * (rows - 1) + 1)
        throw PrecisionError("compressing to " + std::to_string(rows) + " rows needs " +
                             std::to_string(ell * (rows - 1) + 1) + " source rows");
    Mat m = Mat::Zero(rows, rows);
    for (Index n = 0; n < rows; ++n)
        for (Index k = 0; k <= n && k < source.cols(); ++k) m(n, k) = source(ell * n - (ell - 1) * k, k);
    return m;
}

inline Mat compress(const Mat& source, Index ell) {
    return compress(source, ell, (source.rows() - 1) / ell + 1);
}

/// Builds the compressed array from its hat series: column 0 is bhat and
/// column k with k = m (mod ell), 1 <= m <= ell, has generating function
/// t ghat fhat_1 ... fhat_{m-1} (fhat_1 ... fhat_ell)^((k-m)/ell).
inline Mat build(const HatSpec& hat, Index rows) {
    if (hat.precision() < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    for (Index n = 0; n < rows; ++n) m(n, 0) = hat.b[n];
    Series col = hat.g;
    for (Index k = 1; k < rows; ++k) {
        for (Index n = k; n < rows; ++n) m(n, k) = col[n - 1];
        if (k + 1 < rows) col = mul(col, hat.f[(k - 1) % hat.ell]);
    }
    return m;
}

/// Verifies the five skew recurrence families of the compressed array on
/// every determinable cell of the window. The families reference cells
/// above and to the right; references outside the window are skipped.
inline CellReport recurrence_check(const HatSpec& hat, const SequenceChar& seq, Index rows) {
    if (hat.ell != seq.ell) throw StrideMismatchError("hat spec and sequences disagree on the stride");
    const Index ell = hat.ell;
    const Mat d = build(hat, rows);
    const Series a = seq.a_terms();
    const Series w = seq.w_terms();
    std::vector<Series> z;
    for (Index m = 1; m <= ell; ++m) z.push_back(seq.z_terms(m));

    CellReport report;
    for (Index n = 1; n < rows; ++n) {
        for (Index k = 0; k <= n; ++k) {
            const Series* coeffs;
            Index row0, col0;
            if (k == 0) {
                coeffs = &w;
                row0 = n - 1;
                col0 = 0;
            } else if (k < ell) {
                coeffs = &z[static_cast<std::size_t>(k) - 1];
                row0 = n - 1;
                col0 = k;
            } else if (k == ell) {
                coeffs = &z[static_cast<std::size_t>(ell) - 1];
                row0 = n - ell;
                col0 = 0;
            } else {
                coeffs = &a;
                row0 = n - ell;
                col0 = k - ell;
            }
            if (row0 < 0) continue;  // seed rows are not generated by the recurrences
            Rational acc = 0;
            bool determinable = true;
            for (Index j = 0;; ++j) {
                const Index r = row0 + j * (ell - 1);
                const Index c = col0 + j * ell;
                // c - r grows by one per step, so the references stay above
                // the diagonal once they cross it.
                if (c > r) break;
                if (r >= rows) {
                    determinable = false;
                    break;
                }
                if (j > coeffs->precision()) {
                    if (d(r, c) != 0) determinable = false;
                    continue;
                }
                acc += (*coeffs)[j] * d(r, c);
            }
            if (!determinable) {
                ++report.skipped;
                continue;
            }
            ++report.checked;
            if (acc != d(n, k)) {
                report.ok = false;
                report.failures.push_back({n, k, d(n, k), acc});
            }
        }
    }
    return report;
}

struct IdentityReport {
    bool ok = true;
    Index compared_precision = 0;  // smallest precision any identity was compared at
    struct Item {
        std::string name;
        bool ok;
    };
    std::vector<Item> identities;
};

/// Verifies the compressed composition identities: substituting
/// sigma = fhat_1 ... fhat_ell / t^(ell-1) into the t^ell slots of A, Z_m
/// and W reproduces closed forms in the hat series alone. The constants
/// z_{ell,0} and w_0 are computed from the hat spec, never from the
/// sequences.
inline IdentityReport identity_check(const HatSpec& hat, const SequenceChar& seq) {
    if (hat.ell != seq.ell) throw StrideMismatchError("hat spec and sequences disagree on the stride");
    const Index ell = hat.ell;
    Series fprod = hat.f[0];
    for (Index j = 1; j < ell; ++j) fprod = mul(fprod, hat.f[j]);
    const Series sigma = shift(fprod, -(ell - 1));

    IdentityReport report;
    report.compared_precision = sigma.precision();
    const auto check = [&](const std::string& name, const Series& collapsed, const Series& rhs) {
        const Series lhs = compose(collapsed, sigma);
        const bool ok = (lhs == rhs);
        report.compared_precision = std::min(report.compared_precision, common_precision(lhs, rhs));
        report.identities.push_back({name, ok});
        if (!ok) report.ok = false;
    };

    const Rational g0 = hat.g[0];
    const Rational b0 = hat.b[0];
    const Index n = hat.precision();

    check("A", seq.a_terms(), shift(fprod, -ell));
    if (ell >= 2)
        check("Z1", seq.z_terms(1), shift(sub(Series::one(n), div(Series::constant(g0, n), hat.g)), -1));
    Series den = hat.g;
    Rational lead = g0;
    for (Index m = 2; m < ell; ++m) {
        den = mul(den, hat.f[m - 2]);
        lead *= hat.f[m - 2][1];
        const Series frac = div(scale(lead, Series::monomial(Rational(1), m - 1, n)), den);
        check("Z" + std::to_string(m), seq.z_terms(m), shift(sub(Series::one(frac.precision()), frac), -1));
    }

    Series gf = hat.g;  // ghat fhat_1 ... fhat_{ell-1}
    Rational zl0 = g0;
    for (Index j = 0; j + 1 < ell; ++j) {
        gf = mul(gf, hat.f[j]);
        zl0 *= hat.f[j][1];
    }
    zl0 /= b0;
    const Series zl_num = mul(hat.f[ell - 1], sub(gf, scale(zl0, shift(hat.b, ell - 1))));
    const Series zl_q = div(zl_num, mul(Series::monomial(Rational(1), ell, n), hat.g));
    check("Z" + std::to_string(ell), seq.z_terms(ell), add(zl_q, Series::constant(zl0, zl_q.precision())));

    const Rational w0 = hat.b[1] / b0;
    const Series w_inner = sub(mul(hat.b, sub(Series::one(n), Series::monomial(w0, 1, n))),
                               Series::constant(b0, n));
    const Series w_q = div(mul(hat.f[ell - 1], w_inner), mul(Series::monomial(Rational(1), 2, n), hat.g));
    check("W", seq.w_terms(), add(w_q, Series::constant(w0, w_q.precision())));
    return report;
}

}  // namespace riordan
