#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riordan/multi.hpp"

namespace riordan {

/// Multiple almost-Riordan array (b | g; f_1, ..., f_ell): column 0 is b,
/// the remaining columns are the multiple Riordan array (g; f_1, ..., f_ell)
/// shifted one row down and one column right. b, g live in K[[t^ell]] and
/// each f_j in t*K[[t^ell]]; b(0), g(0) and every [t]f_j are nonzero.
struct MultiAlmostSpec {
    Index ell;
    StridedSeries b;
    StridedSeries g;
    std::vector<StridedSeries> f;

    MultiAlmostSpec(Index ell_, Series b_, Series g_, std::vector<Series> f_)
        : ell(ell_), b(certify0(std::move(b_), ell_, "b")), g(certify0(std::move(g_), ell_, "g")),
          f(certify_f(std::move(f_), ell_)) {}

    Index precision() const {
        Index n = std::min(b.precision(), g.precision());
        for (const auto& fj : f) n = std::min(n, fj.precision());
        return n;
    }

    MultiSpec inner() const {
        std::vector<Series> fs;
        fs.reserve(f.size());
        for (const auto& fj : f) fs.push_back(fj.series());
        return MultiSpec(ell, g.series(), std::move(fs));
    }

private:
    static StridedSeries certify0(Series s, Index ell, const char* name) {
        if (ell < 1) throw StrideViolationError("stride must be at least 1");
        if (s[0] == 0) throw OrderError(std::string(name) + "(0) must be nonzero");
        return StridedSeries(std::move(s), ell, 0);
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

inline MultiAlmostSpec multi_almost_identity(Index ell, Index precision) {
    std::vector<Series> f(ell, Series::t(precision));
    return MultiAlmostSpec(ell, Series::one(precision), Series::one(precision), std::move(f));
}

inline HPair compute_h(const MultiAlmostSpec& spec) { return compute_h(spec.f, spec.ell); }

inline Mat build(const MultiAlmostSpec& spec, Index rows) {
    if (spec.precision() < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    for (Index n = 0; n < rows; ++n) m(n, 0) = spec.b[n];
    Series col = spec.g.series();
    for (Index k = 1; k < rows; ++k) {
        for (Index n = k; n < rows; ++n) m(n, k) = col[n - 1];
        if (k + 1 < rows) col = mul(col, spec.f[(k - 1) % spec.ell].series());
    }
    return m;
}

/// Fundamental-theorem action on a stride-certified input: the image of u
/// under the array, as a series. Equals the matrix-vector product against
/// u's coefficient vector on every window.
inline Series apply(const MultiAlmostSpec& spec, const StridedSeries& u) {
    if (u.stride() != spec.ell)
        throw StrideViolationError("input stride does not match the array");
    const Series h = compute_h(spec).h;
    const Series uh = compose(u.series(), h);
    const Index r = u.offset();
    if (r == 0) {
        const Rational u0 = u[0];
        const Series head = scale(u0, spec.b.series());
        const Series tail = mul(div(times_t(spec.g.series()), spec.f[spec.ell - 1].series()),
                                sub(uh, Series::constant(u0, uh.precision())));
        return add(head, tail);
    }
    Series num = times_t(spec.g.series());
    for (Index i = 0; i + 1 < r; ++i) num = mul(num, spec.f[i].series());
    return mul(div(num, pow(h, static_cast<long>(r))), uh);
}

inline MultiAlmostSpec mul(const MultiAlmostSpec& a, const MultiAlmostSpec& c) {
    if (a.ell != c.ell) throw StrideMismatchError("cannot multiply arrays of different stride");
    const Series h = compute_h(a).h;
    const Rational c0 = c.b[0];
    const Series ch = compose(c.b.series(), h);
    const Series head = mul(div(times_t(a.g.series()), a.f[a.ell - 1].series()),
                            sub(ch, Series::constant(c0, ch.precision())));
    std::vector<Series> f;
    f.reserve(a.f.size());
    for (Index j = 0; j < a.ell; ++j)
        f.push_back(mul(div(a.f[j].series(), h), compose(c.f[j].series(), h)));
    return MultiAlmostSpec(a.ell, add(scale(c0, a.b.series()), head),
                           mul(a.g.series(), compose(c.g.series(), h)), std::move(f));
}

inline MultiAlmostSpec inverse(const MultiAlmostSpec& a) {
    const HPair hp = compute_h(a);
    const Series ghb = compose(a.g.series(), hp.hbar);
    const Series bhb = compose(a.b.series(), hp.hbar);
    const Series flhb = compose(a.f[a.ell - 1].series(), hp.hbar);
    const Rational b0 = a.b[0];
    const Series num = mul(flhb, sub(Series::constant(b0, bhb.precision()), bhb));
    const Series den = scale(b0, mul(hp.hbar, ghb));
    const Series binv = add(Series::constant(Rational(1) / b0, num.precision()), div(num, den));
    std::vector<Series> f;
    f.reserve(a.f.size());
    for (Index j = 0; j < a.ell; ++j)
        f.push_back(div(times_t(hp.hbar), compose(a.f[j].series(), hp.hbar)));
    return MultiAlmostSpec(a.ell, binv, div(Series::one(ghb.precision()), ghb), std::move(f));
}

inline MultiAlmostSpec operator*(const MultiAlmostSpec& a, const MultiAlmostSpec& b) { return mul(a, b); }

/// The characterizing tuple (A, Z_1..Z_ell, W): A generates columns k > ell,
/// Z_m column m, W column 0, through the stride-ell recurrences. All
/// generating functions live in K[[t^ell]].
struct SequenceChar {
    Index ell;
    StridedSeries a;
    std::vector<StridedSeries> z;  // z[m-1] is the Z_m generating function
    StridedSeries w;

    const StridedSeries& z_seq(Index m) const { return z.at(static_cast<std::size_t>(m - 1)); }
    // Coefficient lists in the stride variable (a_j = [t^(ell j)] A, ...).
    Series a_terms() const { return decimate(a.series(), ell, 0); }
    Series z_terms(Index m) const { return decimate(z_seq(m).series(), ell, 0); }
    Series w_terms() const { return decimate(w.series(), ell, 0); }
};

inline SequenceChar seq_char(const MultiAlmostSpec& spec) {
    const Index ell = spec.ell;
    const HPair hp = compute_h(spec);
    const Series hbl = pow(hp.hbar, static_cast<long>(ell));
    const Series a = div(Series::monomial(Rational(1), ell, hbl.precision()), hbl);
    const Series ghb = compose(spec.g.series(), hp.hbar);
    const Series bhb = compose(spec.b.series(), hp.hbar);
    const Series flhb = compose(spec.f[ell - 1].series(), hp.hbar);
    const Rational g0 = spec.g[0];
    const Rational b0 = spec.b[0];

    std::vector<StridedSeries> z;
    z.reserve(ell);
    Series fprod = ghb;  // g(hbar) f_1(hbar) ... f_{m-1}(hbar) as m advances
    Rational lead = g0;  // g_0 f_{1,1} ... f_{m-1,1}
    for (Index m = 1; m < ell; ++m) {
        Series frac = (m == 1) ? div(Series::constant(g0, ghb.precision()), ghb)
                               : div(scale(lead, pow(hp.hbar, static_cast<long>(m - 1))), fprod);
        z.push_back(detail::stride_complete(div(sub(Series::one(frac.precision()), frac), hbl), ell));
        fprod = mul(fprod, compose(spec.f[m - 1].series(), hp.hbar));
        lead *= spec.f[m - 1][1];
    }
    // lead is now g_0 f_{1,1} ... f_{ell-1,1}; its ratio to b_0 seeds Z_ell.
    const Rational zl0 = lead / b0;
    const Series term3 = div(scale(zl0, mul(bhb, flhb)), mul(hp.hbar, ghb));
    const Series zl = add(Series::constant(zl0, a.precision()), sub(a, term3));
    z.push_back(detail::stride_complete(zl, ell));

    const Rational w0 = spec.b[ell] / b0;
    const Series wnum = mul(flhb, sub(sub(bhb, scale(w0, mul(hbl, bhb))), Series::constant(b0, bhb.precision())));
    const Series wden = mul(pow(hp.hbar, static_cast<long>(ell + 1)), ghb);
    const Series wq = div(wnum, wden);
    const Series w = add(wq, Series::constant(w0, wq.precision()));
    return {ell, detail::stride_complete(a, ell), std::move(z), detail::stride_complete(w, ell)};
}

/// Production matrix window: column generating functions
/// (W, tZ_1, ..., t^(ell-1) Z_{ell-1}, Z_ell, tA, t^2 A, ...).
inline Mat production(const SequenceChar& seq, Index rows, Index cols) {
    const Index ell = seq.ell;
    const auto need = [&](const StridedSeries& s, Index upto) {
        if (s.precision() < upto)
            throw PrecisionError("production window exceeds the sequence precision; raise the working precision");
    };
    Mat p = Mat::Zero(rows, cols);
    need(seq.w, rows - 1);
    for (Index i = 0; i < rows; ++i) p(i, 0) = seq.w[i];
    for (Index m = 1; m < ell && m < cols; ++m) {
        need(seq.z_seq(m), rows - 1 - m);
        for (Index i = m; i < rows; ++i) p(i, m) = seq.z_seq(m)[i - m];
    }
    if (cols > ell) {
        need(seq.z_seq(ell), rows - 1);
        for (Index i = 0; i < rows; ++i) p(i, ell) = seq.z_seq(ell)[i];
        for (Index k = ell + 1; k < cols; ++k) {
            const Index shift_by = k - ell;
            need(seq.a, rows - 1 - shift_by);
            for (Index i = shift_by; i < rows; ++i) p(i, k) = seq.a[i - shift_by];
        }
    }
    return p;
}

inline Mat production(const MultiAlmostSpec& spec, Index rows, Index cols = -1) {
    return production(seq_char(spec), rows, cols < 0 ? rows : cols);
}

/// Cell-by-cell verification report for recurrence checks.
struct CellReport {
    bool ok = true;
    Index checked = 0;
    Index skipped = 0;  // cells whose determination needs unknown coefficients
    struct Cell {
        Index n, k;
        Rational want, got;
    };
    std::vector<Cell> failures;
};

/// Checks D P = D with its first ell rows deleted, through the four
/// recurrence families: columns k > ell draw on A, column ell on Z_ell,
/// column m < ell on Z_m, column 0 on W.
inline CellReport verify_production(const MultiAlmostSpec& spec, Index rows) {
    const Mat d = build(spec, rows);
    const SequenceChar seq = seq_char(spec);
    const Index ell = spec.ell;
    const Series a = seq.a_terms();
    const Series w = seq.w_terms();
    std::vector<Series> z;
    for (Index m = 1; m <= ell; ++m) z.push_back(seq.z_terms(m));

    CellReport report;
    for (Index target = ell; target < rows; ++target) {
        const Index n = target - ell;
        for (Index k = 0; k <= target; ++k) {
            // Column class selects the family and the referenced columns.
            const Series* coeffs;
            Index col0;
            if (k == 0) {
                coeffs = &w;
                col0 = 0;
            } else if (k < ell) {
                coeffs = &z[static_cast<std::size_t>(k) - 1];
                col0 = k;
            } else if (k == ell) {
                coeffs = &z[static_cast<std::size_t>(ell) - 1];
                col0 = 0;
            } else {
                coeffs = &a;
                col0 = k - ell;
            }
            Rational acc = 0;
            bool determinable = true;
            for (Index j = 0;; ++j) {
                const Index c = col0 + ell * j;
                if (c > n) break;  // strictly above the diagonal from here on
                if (j > coeffs->precision()) {
                    if (d(n, c) != 0) determinable = false;
                    continue;
                }
                acc += (*coeffs)[j] * d(n, c);
            }
            if (!determinable) {
                ++report.skipped;
                continue;
            }
            ++report.checked;
            if (acc != d(target, k)) {
                report.ok = false;
                report.failures.push_back({target, k, d(target, k), acc});
            }
        }
    }
    return report;
}

/// Splits the array into the ell classical column families D_j^* of the
/// interleaving decomposition: D_j^* = (g f_1 ... f_{j-1} / t^(j-1),
/// f_1 ... f_ell). Column i of D_j^*, shifted down by t^j, is column
/// ell*i + j of the original array.
struct ColumnFamily {
    Series g, f;
};

inline std::vector<ColumnFamily> decompose(const MultiAlmostSpec& spec) {
    std::vector<ColumnFamily> out;
    Series p = spec.f[0].series();
    for (Index j = 1; j < spec.ell; ++j) p = mul(p, spec.f[j].series());
    Series num = spec.g.series();
    for (Index j = 1; j <= spec.ell; ++j) {
        out.push_back({shift(num, -(j - 1)), p});
        if (j < spec.ell) num = mul(num, spec.f[j - 1].series());
    }
    return out;
}

struct MarFactorization {
    MultiAlmostSpec appell;    // (b | g; t, ..., t)
    MultiAlmostSpec lagrange;  // (1 | 1; f_1, ..., f_ell)
};

/// Semidirect-product factorization: spec = appell * lagrange exactly.
inline MarFactorization factorize(const MultiAlmostSpec& spec) {
    const Index n = spec.precision();
    std::vector<Series> ts(spec.ell, Series::t(n));
    std::vector<Series> fs;
    fs.reserve(spec.f.size());
    for (const auto& fj : spec.f) fs.push_back(fj.series());
    return {MultiAlmostSpec(spec.ell, spec.b.series(), spec.g.series(), std::move(ts)),
            MultiAlmostSpec(spec.ell, Series::one(n), Series::one(n), std::move(fs))};
}

struct MarLabels {
    bool appell = false;
    bool lagrange = false;
    bool derivative = false;
    std::vector<Index> bell;  // j with f_j = t g, 1-based
    std::vector<Index> lhat;  // j with f_j = t, 1-based
};

inline MarLabels classify(const MultiAlmostSpec& spec) {
    MarLabels out;
    const Index n = spec.precision();
    const Series t = Series::t(n);
    const Series one = Series::one(n);
    const Series tg = times_t(spec.g.series());
    for (Index j = 0; j < spec.ell; ++j) {
        if (spec.f[j].series() == t) out.lhat.push_back(j + 1);
        if (spec.f[j].series() == tg) out.bell.push_back(j + 1);
    }
    out.appell = static_cast<Index>(out.lhat.size()) == spec.ell;
    out.lagrange = (spec.b.series() == one) && (spec.g.series() == one);
    out.derivative = (spec.g.series() == derivative(compute_h(spec).h));
    return out;
}

}  // namespace riordan
