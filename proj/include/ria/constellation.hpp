#pragma once

#include <cstdint>
#include <vector>

#include "ria/rational.hpp"

namespace ria {

/// Finite set of integer points, indexable in ascending enumeration order.
/// Either a contiguous interval [lo, hi] or a base-W digit set
/// { sum_l b_l W^l : 0 <= b_l < digit_bound, l < levels }.
class PointSet {
  public:
    static PointSet interval(int64_t lo, int64_t hi);
    static PointSet digits(int64_t base, int64_t digit_bound, int levels);

    int64_t size() const { return size_; }
    int64_t point(int64_t index) const;
    /// Index of a point, or -1 when the point is not a member (for digit
    /// sets: some extracted digit >= digit_bound).
    int64_t index_of(int64_t point) const;
    int64_t max_point() const;
    int64_t min_point() const;
    int64_t max_abs() const;

    bool is_interval() const { return kind_ == Kind::Interval; }
    int64_t base() const { return base_; }
    int64_t digit_bound() const { return digit_bound_; }
    int levels() const { return levels_; }

    /// Digit vector of a member (digit sets only), least significant first.
    std::vector<int64_t> digits_of(int64_t point) const;

  private:
    enum class Kind { Interval, Digits } kind_ = Kind::Interval;
    int64_t lo_ = 0, hi_ = 0;
    int64_t base_ = 0, digit_bound_ = 0;
    int levels_ = 0;
    int64_t size_ = 0;
};

/// Type I constellation: all integers in [-Q, Q].
struct SingleLayerConstellation {
    int64_t Q = 0;
    PointSet points() const { return PointSet::interval(-Q, Q); }
    int64_t cardinality() const { return 2 * Q + 1; }
};

SingleLayerConstellation build_single_layer(int64_t Q);

/// Type II constellation: base-W integers with L digits, each below a.
struct MultiLayerConstellation {
    int64_t W = 2;  // base, >= 2
    int64_t a = 1;  // digit bound, 1 <= a < W
    int L = 1;      // levels, >= 1

    MultiLayerConstellation() = default;
    MultiLayerConstellation(int64_t W_, int64_t a_, int L_);

    PointSet points() const { return PointSet::digits(W, a, L); }
    int64_t cardinality() const;              // a^L
    int64_t max_point() const;                // (a-1)(W^L-1)/(W-1)
    int64_t encode(const std::vector<int64_t>& digits) const;
    std::vector<int64_t> decode(int64_t point) const;  // throws if not a member
};

}  // namespace ria
