#pragma once

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>
#include <sstream>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = DenseMatrix<Rational>;
using Vec = DenseVector<Rational>;

inline bool mat_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/// First `rows` coefficients of a series as a column vector.
template <class Scalar>
DenseVector<Scalar> series_to_vector(const BasicSeries<Scalar>& s, Index rows) {
    if (s.precision() < rows - 1) throw PrecisionError("series too short for the requested window");
    DenseVector<Scalar> v(rows);
    for (Index n = 0; n < rows; ++n) v(n) = s[n];
    return v;
}

template <class Scalar>
BasicSeries<Scalar> vector_to_series(const DenseVector<Scalar>& v) {
    std::vector<Scalar> c(v.data(), v.data() + v.size());
    return BasicSeries<Scalar>(std::move(c));
}

/// Solve L*X = B for lower-triangular L by forward substitution.
inline Mat lower_tri_solve(const Mat& L, const Mat& B) {
    if (L.rows() != L.cols() || L.rows() != B.rows()) throw SingularSystemError("shape mismatch in triangular solve");
    Mat X = Mat::Zero(B.rows(), B.cols());
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (L(i, i) == 0) throw SingularSystemError("zero diagonal entry in triangular solve");
        for (Eigen::Index c = 0; c < B.cols(); ++c) {
            Rational acc = B(i, c);
            for (Eigen::Index j = 0; j < i; ++j) acc -= L(i, j) * X(j, c);
            X(i, c) = acc / L(i, i);
        }
    }
    return X;
}

/// Triangle rendering: row n prints its first n+1 entries.
inline std::string format_triangle(const Mat& m) {
    std::ostringstream out;
    for (Eigen::Index n = 0; n < m.rows(); ++n) {
        for (Eigen::Index k = 0; k <= n && k < m.cols(); ++k) {
            if (k) out << ' ';
            out << to_string(m(n, k));
        }
        out << '\n';
    }
    return out.str();
}

inline std::string format_full(const Mat& m) {
    std::ostringstream out;
    for (Eigen::Index n = 0; n < m.rows(); ++n) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            if (k) out << ' ';
            out << to_string(m(n, k));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace riordan
