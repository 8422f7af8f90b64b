#include "ria/real.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace ria {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{192};
}

mpfr_prec_t default_precision() { return g_default_prec.load(); }

void set_default_precision(mpfr_prec_t bits) {
    if (bits < 64) throw std::invalid_argument("default precision must be >= 64 bits");
    g_default_prec.store(bits);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real Real::of(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::of(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::of(const mpz_class& v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of(const mpq_class& v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::nan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_nan(r.x_);
    return r;
}

Real Real::round_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::binop(const Real& a, const Real& b, BinFn fn) {
    Real r(std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_)));
    fn(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::mul_si(long k) const {
    Real r(precision());
    mpfr_mul_si(r.x_, x_, k, MPFR_RNDN);
    return r;
}

Real Real::div_si(long k) const {
    Real r(precision());
    mpfr_div_si(r.x_, x_, k, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::log() const {
    Real r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::log2() const {
    Real r(precision());
    mpfr_log2(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::pow(const Real& e) const {
    Real r(std::max(precision(), e.precision()));
    mpfr_pow(r.x_, x_, e.x_, MPFR_RNDN);
    return r;
}

Real Real::floor() const {
    Real r(precision());
    mpfr_floor(r.x_, x_);
    return r;
}

Real Real::ceil() const {
    Real r(precision());
    mpfr_ceil(r.x_, x_);
    return r;
}

mpz_class Real::floor_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDD);
    return z;
}

mpz_class Real::ceil_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDU);
    return z;
}

mpz_class Real::round_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDN);
    return z;
}

std::string Real::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* s = nullptr;
    if (mpfr_asprintf(&s, fmt, x_) < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::add(const Real& a, const Real& b, mpfr_rnd_t r) {
    Real out(std::max(a.precision(), b.precision()));
    mpfr_add(out.x_, a.x_, b.x_, r);
    return out;
}

Real Real::sub(const Real& a, const Real& b, mpfr_rnd_t r) {
    Real out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.x_, a.x_, b.x_, r);
    return out;
}

Real Real::mul(const Real& a, const Real& b, mpfr_rnd_t r) {
    Real out(std::max(a.precision(), b.precision()));
    mpfr_mul(out.x_, a.x_, b.x_, r);
    return out;
}

Real Real::div(const Real& a, const Real& b, mpfr_rnd_t r) {
    Real out(std::max(a.precision(), b.precision()));
    mpfr_div(out.x_, a.x_, b.x_, r);
    return out;
}

Real Real::sqrt_z(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t r) {
    Real t = Real::of(v, prec);
    Real out(prec);
    mpfr_sqrt(out.raw(), t.raw(), r);
    return out;
}

Real Real::from_q(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t r) {
    Real out(prec);
    mpfr_set_q(out.raw(), v.get_mpq_t(), r);
    return out;
}

Real Real::mul_z(const Real& a, const mpz_class& k, mpfr_rnd_t r) {
    Real out(a.precision());
    mpfr_mul_z(out.raw(), a.raw(), k.get_mpz_t(), r);
    return out;
}

Interval Interval::of_q(const mpq_class& v, mpfr_prec_t prec) {
    return {Real::from_q(v, prec, MPFR_RNDD), Real::from_q(v, prec, MPFR_RNDU)};
}

Interval Interval::sqrt_z(const mpz_class& v, mpfr_prec_t prec) {
    return {Real::sqrt_z(v, prec, MPFR_RNDD), Real::sqrt_z(v, prec, MPFR_RNDU)};
}

Interval Interval::operator+(const Interval& o) const {
    return {Real::add(lo, o.lo, MPFR_RNDD), Real::add(hi, o.hi, MPFR_RNDU)};
}

Interval Interval::operator-(const Interval& o) const {
    return {Real::sub(lo, o.hi, MPFR_RNDD), Real::sub(hi, o.lo, MPFR_RNDU)};
}

Interval Interval::operator*(const Interval& o) const {
    // All four corner products with outward rounding.
    const Real* as[2] = {&lo, &hi};
    const Real* bs[2] = {&o.lo, &o.hi};
    Real best_lo = Real::mul(lo, o.lo, MPFR_RNDD);
    Real best_hi = Real::mul(lo, o.lo, MPFR_RNDU);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            Real d = Real::mul(*as[i], *bs[j], MPFR_RNDD);
            Real u = Real::mul(*as[i], *bs[j], MPFR_RNDU);
            if (d < best_lo) best_lo = d;
            if (u > best_hi) best_hi = u;
        }
    return {best_lo, best_hi};
}

Interval Interval::recip() const {
    if (contains_zero()) throw std::domain_error("interval reciprocal across zero");
    Real one = Real::of(1L, lo.precision());
    return {Real::div(one, hi, MPFR_RNDD), Real::div(one, lo, MPFR_RNDU)};
}

Interval Interval::mul_z(const mpz_class& k) const {
    if (sgn(k) >= 0) return {Real::mul_z(lo, k, MPFR_RNDD), Real::mul_z(hi, k, MPFR_RNDU)};
    return {Real::mul_z(hi, k, MPFR_RNDD), Real::mul_z(lo, k, MPFR_RNDU)};
}

Interval Interval::sub_z(const mpz_class& k) const {
    Real rk = Real::of(k, lo.precision());
    return {Real::sub(lo, rk, MPFR_RNDD), Real::sub(hi, rk, MPFR_RNDU)};
}

bool Interval::floor_certain(mpz_class& out) const {
    mpz_class fl = lo.floor_z();
    mpz_class fh = hi.floor_z();
    if (fl == fh) {
        out = fl;
        return true;
    }
    return false;
}

}  // namespace ria
