#pragma once

#include <utility>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Multiply by t, extending the precision by one; exact because t*v is
/// known exactly one index further than v.
template <class Scalar>
BasicSeries<Scalar> times_t(const BasicSeries<Scalar>& v) {
    std::vector<Scalar> c(v.coeffs().size() + 1);
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) c[i + 1] = v.coeffs()[i];
    return BasicSeries<Scalar>(std::move(c));
}

/// Proper Riordan pair: column k of the array has generating function g*f^k.
struct RiordanSpec {
    Series g, f;

    RiordanSpec(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g[0] == 0) throw OrderError("Riordan pair needs g(0) != 0");
        if (f.precision() < 1 || f[0] != 0 || f[1] == 0)
            throw OrderError("Riordan pair needs f of order exactly 1");
    }
};

inline Mat build(const RiordanSpec& spec, Index rows) {
    if (common_precision(spec.g, spec.f) < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    Series col = spec.g;
    for (Index k = 0; k < rows; ++k) {
        for (Index n = k; n < rows; ++n) m(n, k) = col[n];
        if (k + 1 < rows) col = mul(col, spec.f);
    }
    return m;
}

inline RiordanSpec mul(const RiordanSpec& a, const RiordanSpec& b) {
    return RiordanSpec(riordan::mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

inline RiordanSpec inverse(const RiordanSpec& a) {
    const Series fbar = comp_inverse(a.f);
    return RiordanSpec(div(Series::one(fbar.precision()), compose(a.g, fbar)), fbar);
}

inline RiordanSpec operator*(const RiordanSpec& a, const RiordanSpec& b) { return mul(a, b); }

struct AZPair {
    Series a, z;
};

/// A- and Z-sequences of (g, f): f = t*A(f) and g = g(0)/(1 - t*Z(f)).
inline AZPair seq_char(const RiordanSpec& spec) {
    const Series fbar = comp_inverse(spec.f);
    const Index n = fbar.precision();
    const Series a = div(Series::t(n), fbar);
    const Series gfbar = compose(spec.g, fbar);
    const Series z = div(sub(Series::one(n), div(Series::constant(spec.g[0], n), gfbar)), fbar);
    return {a, z};
}

/// Production matrix with column generating functions (Z, A, tA, t^2 A, ...).
inline Mat production(const RiordanSpec& spec, Index size) {
    const AZPair az = seq_char(spec);
    if (az.a.precision() < size - 1 || az.z.precision() < size - 1)
        throw PrecisionError("production window exceeds the A/Z precision; raise the working precision");
    Mat p = Mat::Zero(size, size);
    for (Index i = 0; i < size; ++i) {
        p(i, 0) = az.z[i];
        for (Index k = 1; k < size; ++k)
            if (i >= k - 1) p(i, k) = az.a[i - k + 1];
    }
    return p;
}

/// Quasi-Riordan array [g, f] with columns (g, f, tf, t^2 f, ...).
struct QuasiSpec {
    Series g, f;

    QuasiSpec(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g[0] == 0) throw OrderError("quasi-Riordan pair needs g(0) != 0");
        if (f.precision() < 1 || f[0] != 0 || f[1] == 0)
            throw OrderError("quasi-Riordan pair needs f of order exactly 1");
    }
};

inline Mat build(const QuasiSpec& spec, Index rows) {
    if (common_precision(spec.g, spec.f) < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    for (Index n = 0; n < rows; ++n) m(n, 0) = spec.g[n];
    for (Index k = 1; k < rows; ++k)
        for (Index n = k; n < rows; ++n) m(n, k) = spec.f[n - k + 1];
    return m;
}

inline QuasiSpec mul(const QuasiSpec& a, const QuasiSpec& b) {
    const Index n = std::min(common_precision(a.g, a.f), common_precision(b.g, b.f));
    const Series f_over_t = shift(a.f, -1);
    return QuasiSpec(add(a.g, riordan::mul(f_over_t, sub(b.g, Series::one(n)))), riordan::mul(f_over_t, b.f));
}

inline QuasiSpec operator*(const QuasiSpec& a, const QuasiSpec& b) { return mul(a, b); }

/// First fundamental theorem action: [g, f] u = g u(0) + (f/t)(u - u(0)).
inline Series apply(const QuasiSpec& spec, const Series& u) {
    const Series tail = sub(u, Series::constant(u[0], u.precision()));
    return add(scale(u[0], spec.g), riordan::mul(shift(spec.f, -1), tail));
}

/// Almost-Riordan array (d | g, f) with columns (d, tg, tgf, tgf^2, ...).
struct AlmostSpec {
    Series d, g, f;

    AlmostSpec(Series d_, Series g_, Series f_) : d(std::move(d_)), g(std::move(g_)), f(std::move(f_)) {
        if (d[0] == 0 || g[0] == 0) throw OrderError("almost-Riordan triple needs d(0) != 0 and g(0) != 0");
        if (f.precision() < 1 || f[0] != 0 || f[1] == 0)
            throw OrderError("almost-Riordan triple needs f of order exactly 1");
    }
};

inline Mat build(const AlmostSpec& spec, Index rows) {
    if (std::min(spec.d.precision(), common_precision(spec.g, spec.f)) < rows - 1)
        throw PrecisionError("building " + std::to_string(rows) + " rows needs precision >= rows-1");
    Mat m = Mat::Zero(rows, rows);
    for (Index n = 0; n < rows; ++n) m(n, 0) = spec.d[n];
    Series col = spec.g;
    for (Index k = 1; k < rows; ++k) {
        for (Index n = k; n < rows; ++n) m(n, k) = col[n - 1];
        if (k + 1 < rows) col = riordan::mul(col, spec.f);
    }
    return m;
}

/// Group product. The first component is the fundamental-theorem action of
/// the left factor on the right factor's initial column, which carries the
/// right factor's constant term explicitly so unnormalized triples stay
/// closed under the product.
inline AlmostSpec mul(const AlmostSpec& a, const AlmostSpec& b) {
    const Rational b0 = b.d[0];
    const Series bf = compose(b.d, a.f);
    const Series head = riordan::mul(div(times_t(a.g), a.f),
                                     sub(bf, Series::constant(b0, bf.precision())));
    return AlmostSpec(add(scale(b0, a.d), head), riordan::mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

inline AlmostSpec operator*(const AlmostSpec& a, const AlmostSpec& b) { return mul(a, b); }

struct AlmostFactorization {
    QuasiSpec quasi;      // [d, tg]
    AlmostSpec lagrange;  // (1 | 1, f)
};

/// (d | g, f) = [d, tg] (1 | 1, f).
inline AlmostFactorization factorize(const AlmostSpec& spec) {
    const Index n = std::min(spec.d.precision(), common_precision(spec.g, spec.f));
    return {QuasiSpec(spec.d, times_t(spec.g)),
            AlmostSpec(Series::one(n), Series::one(n), spec.f)};
}

}  // namespace riordan
