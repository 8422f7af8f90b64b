#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ria/rational.hpp"
#include "ria/real.hpp"

namespace ria {

/// Descriptor of the biquadratic real field Q(sqrt(d1), sqrt(d2)) with basis
/// {1, sqrt(d1), sqrt(d2), sqrt(d1*d2)}.  d1 != d2, both square-free, both >= 2,
/// which makes the basis linearly independent over Q.
struct QuadField {
    long d1 = 2;
    long d2 = 3;

    QuadField() = default;
    QuadField(long d1_, long d2_);

    bool operator==(const QuadField& o) const { return d1 == o.d1 && d2 == o.d2; }
    bool operator!=(const QuadField& o) const { return !(*this == o); }
    std::string str() const;
};

bool is_square_free(long d);

/// Exact element c0 + c1 sqrt(d1) + c2 sqrt(d2) + c3 sqrt(d1 d2).
class QuadFieldElement {
  public:
    QuadFieldElement() = default;
    QuadFieldElement(QuadField f, Rational c0, Rational c1, Rational c2, Rational c3)
        : field_(f), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static QuadFieldElement rational(const QuadField& f, const Rational& q) {
        return {f, q, Rational(0), Rational(0), Rational(0)};
    }
    static QuadFieldElement integer(const QuadField& f, long v) { return rational(f, Rational(v)); }
    static QuadFieldElement sqrt_d1(const QuadField& f) { return {f, Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static QuadFieldElement sqrt_d2(const QuadField& f) { return {f, Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static QuadFieldElement sqrt_d1d2(const QuadField& f) { return {f, Rational(0), Rational(0), Rational(0), Rational(1)}; }

    const QuadField& field() const { return field_; }
    const Rational& coord(int i) const { return c_[i]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; element must be rational.
    Rational to_rational() const;

    QuadFieldElement operator-() const;
    QuadFieldElement operator+(const QuadFieldElement& o) const;
    QuadFieldElement operator-(const QuadFieldElement& o) const;
    QuadFieldElement operator*(const QuadFieldElement& o) const;
    QuadFieldElement inverse() const;  // throws std::domain_error on zero
    QuadFieldElement operator/(const QuadFieldElement& o) const { return *this * o.inverse(); }

    QuadFieldElement scale(const Rational& q) const;

    bool operator==(const QuadFieldElement& o) const;
    bool operator!=(const QuadFieldElement& o) const { return !(*this == o); }

    /// Exact sign via interval refinement (terminates: nonzero elements of a
    /// real number field are bounded away from zero at finite precision).
    int sign() const;
    int cmp(const QuadFieldElement& o) const { return (*this - o).sign(); }

    /// Exact floor of the real value.
    mpz_class floor_exact() const;
    mpz_class ceil_exact() const;

    /// Enclosure of the real value at the given working precision.
    Interval interval(mpfr_prec_t prec) const;

    /// Numeric value with relative error at most 2^(3-prec).
    Real to_real(mpfr_prec_t prec = default_precision()) const;

    std::string str() const;

  private:
    void check_same_field(const QuadFieldElement& o) const;
    QuadField field_;
    std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

}  // namespace ria
