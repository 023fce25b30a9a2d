#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

using Index = std::ptrdiff_t;

/// Truncated formal power series with exact coefficients.
///
/// A series stores the coefficients c_0..c_N and nothing else; N is the
/// declared precision. Every operation returns the minimum precision of its
/// inputs, adjusted where an operation genuinely sheds known coefficients
/// (division by t^r, decimation). Precision is tracked, never extended.
template <class Scalar>
class BasicSeries {
public:
    explicit BasicSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw PrecisionError("series needs at least the constant coefficient");
    }

    // Low-order coefficients, zero-extended up to `precision`.
    BasicSeries(std::initializer_list<Scalar> low, Index precision) {
        if (precision < 0) throw PrecisionError("series needs at least the constant coefficient");
        if (precision + 1 < static_cast<Index>(low.size()))
            throw PrecisionError("literal has more coefficients than the requested precision");
        coeffs_.assign(low.begin(), low.end());
        coeffs_.resize(static_cast<std::size_t>(precision) + 1);
    }

    static BasicSeries zero(Index precision) { return BasicSeries({}, precision); }
    static BasicSeries one(Index precision) { return constant(Scalar(1), precision); }
    static BasicSeries constant(Scalar c, Index precision) { return monomial(std::move(c), 0, precision); }
    static BasicSeries t(Index precision) { return monomial(Scalar(1), 1, precision); }

    static BasicSeries monomial(Scalar c, Index degree, Index precision) {
        if (degree < 0 || degree > precision)
            throw PrecisionError("monomial degree exceeds the requested precision");
        std::vector<Scalar> v(static_cast<std::size_t>(precision) + 1);
        v[static_cast<std::size_t>(degree)] = std::move(c);
        return BasicSeries(std::move(v));
    }

    Index precision() const { return static_cast<Index>(coeffs_.size()) - 1; }

    const Scalar& operator[](Index n) const {
        if (n < 0 || n > precision()) throw PrecisionError("coefficient index beyond precision");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    /// Least index with a nonzero coefficient; nullopt when the series is
    /// zero to its full precision.
    std::optional<Index> order() const {
        for (Index n = 0; n <= precision(); ++n)
            if (coeffs_[static_cast<std::size_t>(n)] != 0) return n;
        return std::nullopt;
    }

    bool is_zero() const { return !order().has_value(); }

private:
    std::vector<Scalar> coeffs_;
};

using Series = BasicSeries<Rational>;

template <class Scalar>
BasicSeries<Scalar> truncated(const BasicSeries<Scalar>& a, Index precision) {
    if (precision > a.precision()) throw PrecisionError("cannot extend a series by truncation");
    std::vector<Scalar> v(a.coeffs().begin(), a.coeffs().begin() + precision + 1);
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
Index common_precision(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return std::min(a.precision(), b.precision());
}

/// Equality holds iff the two series agree up to the smaller precision.
template <class Scalar>
bool operator==(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    const Index n = common_precision(a, b);
    for (Index i = 0; i <= n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

template <class Scalar>
bool operator!=(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return !(a == b);
}

template <class Scalar>
BasicSeries<Scalar> add(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    const Index n = common_precision(a, b);
    std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
    for (Index i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a[i] + b[i];
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
BasicSeries<Scalar> sub(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    const Index n = common_precision(a, b);
    std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
    for (Index i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a[i] - b[i];
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
BasicSeries<Scalar> neg(const BasicSeries<Scalar>& a) {
    std::vector<Scalar> v = a.coeffs();
    for (auto& c : v) c = -c;
    return BasicSeries<Scalar>(std::move(v));
}

/// Cauchy product truncated to the common precision.
template <class Scalar>
BasicSeries<Scalar> mul(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    const Index n = common_precision(a, b);
    std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
    for (Index i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (Index j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
BasicSeries<Scalar> scale(const Scalar& c, const BasicSeries<Scalar>& a) {
    std::vector<Scalar> v = a.coeffs();
    for (auto& x : v) x *= c;
    return BasicSeries<Scalar>(std::move(v));
}

/// Quotient q with q*b = a. Requires order(b) <= order(a); the result drops
/// order(b) coefficients of precision.
template <class Scalar>
BasicSeries<Scalar> div(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    const auto rb = b.order();
    if (!rb) throw ZeroDivisorError("division by a series that is zero to precision");
    const Index r = *rb;
    const auto ra = a.order();
    if (ra && *ra < r) throw DivisionOrderError("divisor order exceeds dividend order");
    const Index n = common_precision(a, b) - r;
    if (n < 0) throw PrecisionError("division result has no known coefficients");
    // Strip t^r from both, then divide by the remaining unit.
    std::vector<Scalar> q(static_cast<std::size_t>(n) + 1);
    const Scalar& lead = b[r];
    for (Index i = 0; i <= n; ++i) {
        Scalar acc = (i + r <= a.precision()) ? a[i + r] : Scalar(0);
        for (Index j = 0; j < i; ++j) acc -= q[static_cast<std::size_t>(j)] * b[i - j + r];
        q[static_cast<std::size_t>(i)] = acc / lead;
    }
    return BasicSeries<Scalar>(std::move(q));
}

/// outer(inner) for inner of positive order, by Horner evaluation.
template <class Scalar>
BasicSeries<Scalar> compose(const BasicSeries<Scalar>& outer, const BasicSeries<Scalar>& inner) {
    if (inner[0] != 0) throw CompositionOrderError("inner series must have zero constant term");
    const Index n = common_precision(outer, inner);
    BasicSeries<Scalar> acc = BasicSeries<Scalar>::constant(outer[std::min(outer.precision(), n)], n);
    const BasicSeries<Scalar> in = truncated(inner, n);
    for (Index k = std::min(outer.precision(), n) - 1; k >= 0; --k) {
        acc = mul(acc, in);
        acc = add(acc, BasicSeries<Scalar>::constant(outer[k], n));
    }
    return acc;
}

/// Integer power; negative exponents divide, shedding |e|*order(a).
template <class Scalar>
BasicSeries<Scalar> pow(const BasicSeries<Scalar>& a, long e) {
    if (e < 0) return div(BasicSeries<Scalar>::one(a.precision()), pow(a, -e));
    BasicSeries<Scalar> acc = BasicSeries<Scalar>::one(a.precision());
    for (long i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

/// Re-index by +k. Positive k zero-fills the low coefficients and keeps the
/// declared precision; negative k requires order(a) >= -k and yields N+k.
template <class Scalar>
BasicSeries<Scalar> shift(const BasicSeries<Scalar>& a, Index k) {
    if (k == 0) return a;
    if (k > 0) {
        const Index n = a.precision();
        std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
        for (Index i = k; i <= n; ++i) v[static_cast<std::size_t>(i)] = a[i - k];
        return BasicSeries<Scalar>(std::move(v));
    }
    const Index drop = -k;
    const auto r = a.order();
    if (r && *r < drop) throw ShiftOrderError("shift would discard nonzero low-order coefficients");
    if (a.precision() < drop) throw PrecisionError("shift exceeds the known coefficients");
    std::vector<Scalar> v(a.coeffs().begin() + drop, a.coeffs().end());
    return BasicSeries<Scalar>(std::move(v));
}

/// Series v with v^n = u, for u with a nonzero constant term whose rational
/// n-th root exists. Picks the principal root.
template <class Scalar>
BasicSeries<Scalar> nth_root_unit(const BasicSeries<Scalar>& u, unsigned n) {
    if (n == 0) throw OrderError("0-th root is undefined");
    if (u[0] == 0) throw ZeroConstantError("nth_root_unit needs a nonzero constant term");
    const auto root = exact_nth_root(u[0], n);
    if (!root) throw IrrationalRootError("constant term has no rational " + std::to_string(n) + "-th root");
    const Index N = u.precision();
    // u = u0 (1 + w); expand (1 + w)^(1/n) binomially, w of positive order.
    const BasicSeries<Scalar> w = sub(div(u, BasicSeries<Scalar>::constant(u[0], N)), BasicSeries<Scalar>::one(N));
    BasicSeries<Scalar> acc = BasicSeries<Scalar>::one(N);
    BasicSeries<Scalar> wpow = BasicSeries<Scalar>::one(N);
    Scalar binom(1);
    const Scalar alpha = Scalar(1) / Scalar(static_cast<long>(n));
    for (Index m = 1; m <= N; ++m) {
        wpow = mul(wpow, w);
        binom *= (alpha - Scalar(static_cast<long>(m) - 1)) / Scalar(static_cast<long>(m));
        if (wpow.is_zero()) break;
        acc = add(acc, scale(binom, wpow));
    }
    return scale(*root, acc);
}

/// fbar with f(fbar) = fbar(f) = t, for f of order exactly 1, via the
/// Lagrange inversion coefficients.
template <class Scalar>
BasicSeries<Scalar> comp_inverse(const BasicSeries<Scalar>& f) {
    if (f.precision() < 1 || f[0] != 0 || f[1] == 0)
        throw OrderError("compositional inverse needs a series of order exactly 1");
    const Index N = f.precision();
    // u = t/f is a unit known to N-1.
    const BasicSeries<Scalar> u = div(BasicSeries<Scalar>::t(N), f);
    std::vector<Scalar> v(static_cast<std::size_t>(N) + 1);
    BasicSeries<Scalar> upow = u;  // u^n as n advances
    v[1] = u[0];
    for (Index n = 2; n <= N; ++n) {
        upow = mul(upow, u);
        v[static_cast<std::size_t>(n)] = upow[n - 1] / Scalar(static_cast<long>(n));
    }
    return BasicSeries<Scalar>(std::move(v));
}

/// Coefficient at r + stride*k of a becomes coefficient k; every stored
/// coefficient off the support {r + stride*k} must be zero.
template <class Scalar>
BasicSeries<Scalar> decimate(const BasicSeries<Scalar>& a, Index stride, Index offset) {
    if (stride < 1 || offset < 0 || offset >= stride)
        throw StrideViolationError("decimate needs stride >= 1 and 0 <= offset < stride");
    const Index N = a.precision();
    if (N < offset) throw PrecisionError("decimation has no known coefficients");
    for (Index i = 0; i <= N; ++i) {
        if ((i - offset) % stride != 0 && a[i] != 0) {
            std::ostringstream msg;
            msg << "nonzero coefficient at index " << i << " off the support {" << offset << " + " << stride << "k}";
            throw StrideViolationError(msg.str());
        }
    }
    const Index n = (N - offset) / stride;
    std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
    for (Index k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[offset + stride * k];
    return BasicSeries<Scalar>(std::move(v));
}

/// Inverse of decimate: coefficient k moves to index offset + stride*k.
template <class Scalar>
BasicSeries<Scalar> inflate(const BasicSeries<Scalar>& a, Index stride, Index offset) {
    if (stride < 1 || offset < 0 || offset >= stride)
        throw StrideViolationError("inflate needs stride >= 1 and 0 <= offset < stride");
    const Index n = offset + stride * a.precision();
    std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
    for (Index k = 0; k <= a.precision(); ++k) v[static_cast<std::size_t>(offset + stride * k)] = a[k];
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
BasicSeries<Scalar> derivative(const BasicSeries<Scalar>& a) {
    if (a.precision() < 1) throw PrecisionError("derivative needs precision >= 1");
    std::vector<Scalar> v(static_cast<std::size_t>(a.precision()));
    for (Index n = 1; n <= a.precision(); ++n)
        v[static_cast<std::size_t>(n) - 1] = Scalar(static_cast<long>(n)) * a[n];
    return BasicSeries<Scalar>(std::move(v));
}

template <class Scalar>
BasicSeries<Scalar> operator+(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return add(a, b);
}
template <class Scalar>
BasicSeries<Scalar> operator-(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return sub(a, b);
}
template <class Scalar>
BasicSeries<Scalar> operator-(const BasicSeries<Scalar>& a) {
    return neg(a);
}
template <class Scalar>
BasicSeries<Scalar> operator*(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return mul(a, b);
}
template <class Scalar>
BasicSeries<Scalar> operator/(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b) {
    return div(a, b);
}

template <class Scalar>
std::string to_string(const BasicSeries<Scalar>& a) {
    std::ostringstream out;
    bool first = true;
    for (Index n = 0; n <= a.precision(); ++n) {
        if (a[n] == 0) continue;
        out << (first ? "" : " + ") << to_string(a[n]);
        if (n > 0) out << "*t^" << n;
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << a.precision() + 1 << ")";
    return out.str();
}

}  // namespace riordan
