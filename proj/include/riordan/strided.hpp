#pragma once

#include <sstream>
#include <utility>

#include "riordan/series.hpp"

namespace riordan {

/// A series certified to live on the support {offset + stride*k}: the
/// constructor rejects any stored nonzero coefficient off that pattern.
template <class Scalar>
class BasicStridedSeries {
public:
    BasicStridedSeries(BasicSeries<Scalar> series, Index stride, Index offset)
        : series_(std::move(series)), stride_(stride), offset_(offset) {
        if (stride_ < 1 || offset_ < 0 || offset_ >= stride_)
            throw StrideViolationError("stride must be >= 1 with 0 <= offset < stride");
        for (Index n = 0; n <= series_.precision(); ++n) {
            if ((n - offset_) % stride_ != 0 && series_[n] != 0) {
                std::ostringstream msg;
                msg << "coefficient at index " << n << " violates support {" << offset_ << " + " << stride_ << "k}";
                throw StrideViolationError(msg.str());
            }
        }
    }

    const BasicSeries<Scalar>& series() const { return series_; }
    Index stride() const { return stride_; }
    Index offset() const { return offset_; }
    Index precision() const { return series_.precision(); }
    const Scalar& operator[](Index n) const { return series_[n]; }

private:
    BasicSeries<Scalar> series_;
    Index stride_;
    Index offset_;
};

using StridedSeries = BasicStridedSeries<Rational>;

}  // namespace riordan
