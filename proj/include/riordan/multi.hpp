#pragma once

#include <utility>
#include <vector>

#include "riordan/classic.hpp"
#include "riordan/matrix.hpp"
#include "riordan/strided.hpp"

namespace riordan {

/// Multiple Riordan array (g; f_1, ..., f_ell): column 0 is g and the
/// multiplier functions cycle, so column k is g f_1^e1 ... f_ell^eell with
/// the exponents advancing every ell columns. g lives in K[[t^ell]], each
/// f_j in t*K[[t^ell]].
struct MultiSpec {
    Index ell;
    StridedSeries g;
    std::vector<StridedSeries> f;

    MultiSpec(Index ell_, Series g_, std::vector<Series> f_)
        : ell(ell_), g(certify_g(std::move(g_), ell_)), f(certify_f(std::move(f_), ell_)) {}

    Index precision() const {
        Index n = g.precision();
        for (const auto& fj : f) n = std::min(n, fj.precision());
        return n;
    }

private:
    static StridedSeries certify_g(Series g, Index ell) {
        if (ell < 1) throw StrideViolationError("stride must be at least 1");
        if (g[0] == 0) throw OrderError("g(0) must be nonzero");
        return StridedSeries(std::move(g), ell, 0);
    }
    static std::vector<StridedSeries> certify_f(std::vector<Series> f, Index ell) {
        if (static_cast<Index>(f.size()) != ell)
            throw StrideMismatchError("expected exactly ell multiplier functions");
        std::vector<StridedSeries> out;
        out.reserve(f.size());
        for (auto& fj : f) {
            if (fj.precision() < 1 || fj[0] != 0 || fj[1] == 0)
                throw OrderError("every multiplier must have order exactly 1");
            out.emplace_back(std::move(fj), ell, 1);
        }
        return out;
    }
};

/// h = (f_1 ... f_ell)^(1/ell) and its compositional inverse; the pivot of
/// every group formula.
struct HPair {
    Series h, hbar;
};

inline HPair compute_h(const std::vector<StridedSeries>& f, Index ell) {
    Series p = f[0].series();
    for (Index j = 1; j < ell; ++j) p = mul(p, f[j].series());
    const Series unit = shift(p, -ell);
    const Series root = nth_root_unit(unit, static_cast<unsigned>(ell));
    const Series h = times_t(root);
    return {h, comp_inverse(h)};
}

inline HPair compute_h(const MultiSpec& spec) { return compute_h(spec.f, spec.ell); }

inline Mat build(const MultiSpec& spec, Index rows) {
    if (spec.precision() < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    Series col = spec.g.series();
    for (Index k = 0; k < rows; ++k) {
        for (Index n = k; n < rows; ++n) m(n, k) = col[n];
        if (k + 1 < rows) col = mul(col, spec.f[k % spec.ell].series());
    }
    return m;
}

inline MultiSpec mul(const MultiSpec& a, const MultiSpec& b) {
    if (a.ell != b.ell) throw StrideMismatchError("cannot multiply arrays of different stride");
    const Series h = compute_h(a).h;
    std::vector<Series> f;
    f.reserve(a.f.size());
    for (Index j = 0; j < a.ell; ++j)
        f.push_back(mul(div(a.f[j].series(), h), compose(b.f[j].series(), h)));
    return MultiSpec(a.ell, mul(a.g.series(), compose(b.g.series(), h)), std::move(f));
}

inline MultiSpec inverse(const MultiSpec& a) {
    const HPair hp = compute_h(a);
    const Series ghb = compose(a.g.series(), hp.hbar);
    std::vector<Series> f;
    f.reserve(a.f.size());
    for (Index j = 0; j < a.ell; ++j)
        f.push_back(div(times_t(hp.hbar), compose(a.f[j].series(), hp.hbar)));
    return MultiSpec(a.ell, div(Series::one(ghb.precision()), ghb), std::move(f));
}

inline MultiSpec operator*(const MultiSpec& a, const MultiSpec& b) { return mul(a, b); }

inline MultiSpec multi_identity(Index ell, Index precision) {
    std::vector<Series> f(ell, Series::t(precision));
    return MultiSpec(ell, Series::one(precision), std::move(f));
}

/// Bivariate window, row-sum series and diagonal-sum series of the array.
/// [t^n y^k] of the bivariate generating function is the matrix entry, the
/// row sums evaluate it at y = 1 and the diagonal sums at y = t.
struct SummaryGfs {
    Mat bivariate;
    Series row_sums;
    Series diagonal_sums;
};

inline SummaryGfs summary_gfs(const MultiSpec& spec, Index rows) {
    if (spec.precision() < rows - 1) throw PrecisionError("summary window needs precision >= rows-1");
    const Index n = spec.precision();
    // Numerator column families g f_1...f_m and the cycle product.
    std::vector<Series> num;
    num.push_back(spec.g.series());
    for (Index m = 1; m < spec.ell; ++m) num.push_back(mul(num.back(), spec.f[m - 1].series()));
    const Series cycle = mul(num.back(), spec.f[spec.ell - 1].series());

    Mat biv = Mat::Zero(rows, rows);
    Series pj = Series::one(n);
    for (Index k = 0; k < rows; ++k) {
        const Series colgf = mul(num[k % spec.ell], pj);
        for (Index i = 0; i < rows; ++i) biv(i, k) = colgf[i];
        if ((k + 1) % spec.ell == 0) pj = mul(pj, cycle);
    }

    Series num_sum = num[0];
    Series diag_num = num[0];
    for (Index m = 1; m < spec.ell; ++m) {
        num_sum = add(num_sum, num[m]);
        diag_num = add(diag_num, shift(num[m], m));
    }
    const Series row_sums = div(num_sum, sub(Series::one(n), cycle));
    const Series diag_sums = div(diag_num, sub(Series::one(n), shift(cycle, spec.ell)));
    return {std::move(biv), row_sums, diag_sums};
}

/// Sequence characterization of a multiple Riordan array: one A-sequence
/// governing columns k >= ell and Z_0..Z_{ell-1} governing columns 0..ell-1,
/// all with generating functions in K[[t^ell]].
struct MultiSeqChar {
    Index ell;
    StridedSeries a;
    std::vector<StridedSeries> z;  // z[m] is the Z_m generating function
};

namespace detail {

// Largest stride-complete truncation, certified on the stride.
inline StridedSeries stride_complete(const Series& s, Index ell) {
    const Index p = (s.precision() / ell) * ell;
    return StridedSeries(truncated(s, p), ell, 0);
}

}  // namespace detail

inline MultiSeqChar seq_char(const MultiSpec& spec) {
    const Index ell = spec.ell;
    const HPair hp = compute_h(spec);
    const Series hbl = pow(hp.hbar, static_cast<long>(ell));
    const Series a = div(Series::monomial(Rational(1), ell, hbl.precision()), hbl);
    const Series ghb = compose(spec.g.series(), hp.hbar);
    const Rational g0 = spec.g[0];

    std::vector<StridedSeries> z;
    z.reserve(ell);
    const Series one = Series::one(ghb.precision());
    z.push_back(detail::stride_complete(div(sub(one, div(Series::constant(g0, ghb.precision()), ghb)), hbl), ell));
    Series fprod = ghb;
    Rational c = g0;
    for (Index m = 1; m < ell; ++m) {
        fprod = mul(fprod, compose(spec.f[m - 1].series(), hp.hbar));
        c *= spec.f[m - 1][1];
        const Series frac = div(scale(c, pow(hp.hbar, static_cast<long>(m))), fprod);
        z.push_back(detail::stride_complete(div(sub(Series::one(frac.precision()), frac), hbl), ell));
    }
    return {ell, detail::stride_complete(a, ell), std::move(z)};
}

struct MultiLabels {
    bool appell = false;
    bool lagrange = false;
    bool derivative = false;
    std::vector<Index> bell;  // j with f_j = t g, 1-based
};

inline MultiLabels classify(const MultiSpec& spec) {
    MultiLabels out;
    const Index n = spec.precision();
    const Series t = Series::t(n);
    out.appell = true;
    for (const auto& fj : spec.f)
        if (fj.series() != t) out.appell = false;
    out.lagrange = (spec.g.series() == Series::one(n));
    out.derivative = (spec.g.series() == derivative(compute_h(spec).h));
    const Series tg = times_t(spec.g.series());
    for (Index j = 0; j < spec.ell; ++j)
        if (spec.f[j].series() == tg) out.bell.push_back(j + 1);
    return out;
}

}  // namespace riordan
