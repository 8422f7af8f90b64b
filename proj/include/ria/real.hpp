#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace ria {

/// Process-wide default significand precision in bits (>= 64).
/// Overridden by the CLI --precision flag or RIA_PRECISION_BITS.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);

/// Arbitrary-precision real with explicit precision tracking.
/// Arithmetic rounds to nearest; the result of a binary operation carries
/// max(precision of operands) so precision never silently downgrades.
class Real {
  public:
    Real() : Real(default_precision()) {}
    explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, clamp(prec)); mpfr_set_zero(x_, 1); }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~Real() { mpfr_clear(x_); }

    static Real of(double v, mpfr_prec_t prec = default_precision());
    static Real of(long v, mpfr_prec_t prec = default_precision());
    static Real of(const mpz_class& v, mpfr_prec_t prec = default_precision());
    static Real of(const mpq_class& v, mpfr_prec_t prec = default_precision());
    static Real nan(mpfr_prec_t prec = default_precision());

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
    /// Same value re-rounded to a new precision.
    Real round_to(mpfr_prec_t prec) const;

    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sgn() const { return mpfr_sgn(x_); }

    Real operator-() const;
    Real abs() const;
    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real& operator+=(const Real& b) { *this = *this + b; return *this; }
    Real& operator-=(const Real& b) { *this = *this - b; return *this; }
    Real& operator*=(const Real& b) { *this = *this * b; return *this; }
    Real& operator/=(const Real& b) { *this = *this / b; return *this; }

    Real mul_si(long k) const;
    Real div_si(long k) const;

    Real sqrt() const;
    Real log() const;    // natural log
    Real log2() const;
    Real exp() const;
    Real pow(const Real& e) const;
    Real floor() const;
    Real ceil() const;

    /// floor/ceil/nearest as integers; value must fit.
    mpz_class floor_z() const;
    mpz_class ceil_z() const;
    mpz_class round_z() const;

    int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return a.cmp(b) != 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    /// Directed-rounding primitives for interval work.
    static Real add(const Real& a, const Real& b, mpfr_rnd_t r);
    static Real sub(const Real& a, const Real& b, mpfr_rnd_t r);
    static Real mul(const Real& a, const Real& b, mpfr_rnd_t r);
    static Real div(const Real& a, const Real& b, mpfr_rnd_t r);
    static Real sqrt_z(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t r);
    static Real from_q(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t r);
    static Real mul_z(const Real& a, const mpz_class& k, mpfr_rnd_t r);

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, BinFn fn);
    mpfr_t x_;
};

/// Closed interval [lo, hi] with outward rounding; used to certify signs,
/// floors and continued-fraction quotients of numeric values.
struct Interval {
    Real lo, hi;

    static Interval point(const Real& v) { return {v, v}; }
    static Interval of_q(const mpq_class& v, mpfr_prec_t prec);
    static Interval sqrt_z(const mpz_class& v, mpfr_prec_t prec);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval recip() const;  // requires 0 not inside
    Interval mul_z(const mpz_class& k) const;
    Interval sub_z(const mpz_class& k) const;

    bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
    /// Certified sign: -1, 0 never returned (call contains_zero first), +1.
    int sign() const { return lo.sgn() > 0 ? 1 : -1; }
    /// Certified floor if both ends agree, otherwise nullopt semantics via ok=false.
    bool floor_certain(mpz_class& out) const;
};

}  // namespace ria
