#include "ria/constellation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ria {

namespace {
int64_t checked_pow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > INT64_MAX / base) throw std::overflow_error("point set too large for int64");
        r *= base;
    }
    return r;
}
}

PointSet PointSet::interval(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("PointSet::interval: lo > hi");
    PointSet s;
    s.kind_ = Kind::Interval;
    s.lo_ = lo;
    s.hi_ = hi;
    s.size_ = hi - lo + 1;
    return s;
}

PointSet PointSet::digits(int64_t base, int64_t digit_bound, int levels) {
    if (base < 2) throw std::invalid_argument("PointSet::digits: base >= 2 required");
    if (digit_bound < 1 || digit_bound > base)
        throw std::invalid_argument("PointSet::digits: need 1 <= digit_bound <= base");
    if (levels < 1) throw std::invalid_argument("PointSet::digits: levels >= 1 required");
    PointSet s;
    s.kind_ = Kind::Digits;
    s.base_ = base;
    s.digit_bound_ = digit_bound;
    s.levels_ = levels;
    s.size_ = checked_pow(digit_bound, levels);
    // Also guard the largest point value.
    (void)checked_pow(base, levels);
    return s;
}

int64_t PointSet::point(int64_t index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("PointSet::point: index");
    if (kind_ == Kind::Interval) return lo_ + index;
    int64_t v = 0, w = 1, i = index;
    for (int l = 0; l < levels_; ++l) {
        v += (i % digit_bound_) * w;
        i /= digit_bound_;
        w *= base_;
    }
    return v;
}

int64_t PointSet::index_of(int64_t point) const {
    if (kind_ == Kind::Interval) {
        if (point < lo_ || point > hi_) return -1;
        return point - lo_;
    }
    int64_t idx = 0, mul = 1, v = point;
    if (v < 0) return -1;
    for (int l = 0; l < levels_; ++l) {
        int64_t d = v % base_;
        if (d >= digit_bound_) return -1;
        idx += d * mul;
        mul *= digit_bound_;
        v /= base_;
    }
    if (v != 0) return -1;
    return idx;
}

int64_t PointSet::max_point() const {
    if (kind_ == Kind::Interval) return hi_;
    return point(size_ - 1);
}

int64_t PointSet::min_point() const {
    if (kind_ == Kind::Interval) return lo_;
    return 0;
}

int64_t PointSet::max_abs() const {
    return std::max(std::llabs(min_point()), std::llabs(max_point()));
}

std::vector<int64_t> PointSet::digits_of(int64_t point) const {
    if (kind_ != Kind::Digits) throw std::logic_error("digits_of on interval set");
    std::vector<int64_t> out(levels_);
    int64_t v = point;
    for (int l = 0; l < levels_; ++l) {
        int64_t d = v % base_;
        if (d >= digit_bound_ || v < 0)
            throw std::invalid_argument("point " + std::to_string(point) + " not in constellation");
        out[l] = d;
        v /= base_;
    }
    if (v != 0) throw std::invalid_argument("point " + std::to_string(point) + " not in constellation");
    return out;
}

SingleLayerConstellation build_single_layer(int64_t Q) {
    if (Q < 0) throw std::invalid_argument("single layer: Q >= 0 required");
    return SingleLayerConstellation{Q};
}

MultiLayerConstellation::MultiLayerConstellation(int64_t W_, int64_t a_, int L_) : W(W_), a(a_), L(L_) {
    if (W < 2) throw std::invalid_argument("multi layer: W >= 2 required");
    if (a < 1 || a >= W) throw std::invalid_argument("multi layer: 1 <= a < W required");
    if (L < 1) throw std::invalid_argument("multi layer: L >= 1 required");
    (void)checked_pow(W, L);
}

int64_t MultiLayerConstellation::cardinality() const { return checked_pow(a, L); }

int64_t MultiLayerConstellation::max_point() const {
    return (a - 1) * ((checked_pow(W, L) - 1) / (W - 1));
}

int64_t MultiLayerConstellation::encode(const std::vector<int64_t>& digits) const {
    if (int(digits.size()) != L) throw std::invalid_argument("encode: expected " + std::to_string(L) + " digits");
    int64_t v = 0, w = 1;
    for (int l = 0; l < L; ++l) {
        if (digits[l] < 0 || digits[l] >= a)
            throw std::invalid_argument("encode: digit " + std::to_string(digits[l]) + " out of range at level " +
                                        std::to_string(l));
        v += digits[l] * w;
        w *= W;
    }
    return v;
}

std::vector<int64_t> MultiLayerConstellation::decode(int64_t point) const {
    return points().digits_of(point);
}

}  // namespace ria
