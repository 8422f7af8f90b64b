#include "ria/quad_field.hpp"

#include <sstream>
#include <stdexcept>

#include "ria/errors.hpp"

namespace ria {

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadField::QuadField(long d1_, long d2_) : d1(d1_), d2(d2_) {
    if (d1 < 2 || d2 < 2) throw std::invalid_argument("field radicands must be >= 2");
    if (d1 == d2) throw std::invalid_argument("field radicands must be distinct");
    if (!is_square_free(d1) || !is_square_free(d2))
        throw std::invalid_argument("field radicands must be square-free");
}

std::string QuadField::str() const {
    std::ostringstream os;
    os << "Q(sqrt" << d1 << ",sqrt" << d2 << ")";
    return os.str();
}

void QuadFieldElement::check_same_field(const QuadFieldElement& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("mismatched field descriptors: " + field_.str() + " vs " + o.field_.str());
}

bool QuadFieldElement::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool QuadFieldElement::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Rational QuadFieldElement::to_rational() const {
    if (!is_rational()) throw std::domain_error("element is irrational: " + str());
    return c_[0];
}

QuadFieldElement QuadFieldElement::operator-() const {
    return {field_, -c_[0], -c_[1], -c_[2], -c_[3]};
}

QuadFieldElement QuadFieldElement::operator+(const QuadFieldElement& o) const {
    check_same_field(o);
    return {field_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

QuadFieldElement QuadFieldElement::operator-(const QuadFieldElement& o) const {
    check_same_field(o);
    return {field_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

QuadFieldElement QuadFieldElement::operator*(const QuadFieldElement& o) const {
    check_same_field(o);
    const Rational& a0 = c_[0];
    const Rational& a1 = c_[1];
    const Rational& a2 = c_[2];
    const Rational& a3 = c_[3];
    const Rational& b0 = o.c_[0];
    const Rational& b1 = o.c_[1];
    const Rational& b2 = o.c_[2];
    const Rational& b3 = o.c_[3];
    Rational d1(field_.d1), d2(field_.d2);
    Rational d12 = d1 * d2;
    // Multiplication table: r1^2=d1, r2^2=d2, r3^2=d1 d2, r1 r2=r3,
    // r1 r3=d1 r2, r2 r3=d2 r1.
    Rational e0 = a0 * b0 + d1 * (a1 * b1) + d2 * (a2 * b2) + d12 * (a3 * b3);
    Rational e1 = a0 * b1 + a1 * b0 + d2 * (a2 * b3 + a3 * b2);
    Rational e2 = a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1);
    Rational e3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return {field_, e0, e1, e2, e3};
}

QuadFieldElement QuadFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero field element");
    // Galois conjugates: s1 negates sqrt(d1), s2 negates sqrt(d2).
    QuadFieldElement s1{field_, c_[0], -c_[1], c_[2], -c_[3]};
    QuadFieldElement s2{field_, c_[0], c_[1], -c_[2], -c_[3]};
    QuadFieldElement s12{field_, c_[0], -c_[1], -c_[2], c_[3]};
    QuadFieldElement prod = s1 * s2 * s12;
    QuadFieldElement norm = *this * prod;
    if (!norm.is_rational() || sgn(norm.coord(0)) == 0)
        throw std::logic_error("field norm failure (non-field descriptor?)");
    Rational inv_norm = Rational(1) / norm.coord(0);
    return prod.scale(inv_norm);
}

QuadFieldElement QuadFieldElement::scale(const Rational& q) const {
    return {field_, c_[0] * q, c_[1] * q, c_[2] * q, c_[3] * q};
}

bool QuadFieldElement::operator==(const QuadFieldElement& o) const {
    return field_ == o.field_ && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2] && c_[3] == o.c_[3];
}

Interval QuadFieldElement::interval(mpfr_prec_t prec) const {
    Interval acc = Interval::of_q(c_[0], prec);
    if (sgn(c_[1]) != 0)
        acc = acc + Interval::sqrt_z(field_.d1, prec) * Interval::of_q(c_[1], prec);
    if (sgn(c_[2]) != 0)
        acc = acc + Interval::sqrt_z(field_.d2, prec) * Interval::of_q(c_[2], prec);
    if (sgn(c_[3]) != 0)
        acc = acc + Interval::sqrt_z(mpz_class(field_.d1) * field_.d2, prec) * Interval::of_q(c_[3], prec);
    return acc;
}

int QuadFieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    for (mpfr_prec_t p = 96; p <= (mpfr_prec_t(1) << 20); p *= 2) {
        Interval iv = interval(p);
        if (!iv.contains_zero()) return iv.sign();
    }
    throw PrecisionExhausted("sign of field element undecided at 2^20 bits: " + str());
}

mpz_class QuadFieldElement::floor_exact() const {
    if (is_rational()) return floor_q(c_[0]);
    for (mpfr_prec_t p = 96; p <= (mpfr_prec_t(1) << 20); p *= 2) {
        Interval iv = interval(p);
        mpz_class fl;
        if (iv.floor_certain(fl)) return fl;
        // The enclosure straddles an integer boundary t: decide x - t exactly.
        mpz_class t = iv.hi.floor_z();
        QuadFieldElement shifted = *this - QuadFieldElement::rational(field_, Rational(t));
        int s = shifted.sign();
        if (s >= 0) return t;
        return t - 1;
    }
    throw PrecisionExhausted("floor of field element undecided");
}

mpz_class QuadFieldElement::ceil_exact() const {
    return -((-*this).floor_exact());
}

Real QuadFieldElement::to_real(mpfr_prec_t prec) const {
    if (is_zero()) return Real::of(0L, prec);
    if (is_rational()) return Real::of(c_[0], prec);
    // Refine until the enclosure certifies the requested relative error.
    for (mpfr_prec_t p = prec + 16; p <= (mpfr_prec_t(1) << 20); p *= 2) {
        Interval iv = interval(p);
        if (iv.contains_zero()) continue;  // cancellation; refine
        Real width = Real::sub(iv.hi, iv.lo, MPFR_RNDU);
        Real mag = (iv.lo.sgn() > 0 ? iv.lo : iv.hi.abs());
        // width <= 2^(1-prec) * |value| guarantees the 2^(3-prec) bound after
        // the final rounding to prec bits.
        Real budget = mag * Real::of(2.0, 64).pow(Real::of(long(1) - long(prec), 64));
        if (width <= budget) {
            Real mid = (iv.lo + iv.hi).div_si(2);
            return mid.round_to(prec);
        }
    }
    throw PrecisionExhausted("to_real: cancellation too deep: " + str());
}

std::string QuadFieldElement::str() const {
    std::ostringstream os;
    os << "(" << to_string(c_[0]) << "," << to_string(c_[1]) << "," << to_string(c_[2]) << ","
       << to_string(c_[3]) << ")@" << field_.str();
    return os.str();
}

}  // namespace ria
