#include "ria/continued_fraction.hpp"

#include <stdexcept>

#include "ria/errors.hpp"

namespace ria {

namespace {

struct ConvergentBuilder {
    mpz_class n_prev = 0, m_prev = 1;  // index -2
    mpz_class n_cur = 1, m_cur = 0;    // index -1, so the first push lands a0/1

    void push(ContinuedFraction& cf, const mpz_class& a) {
        mpz_class n = a * n_cur + n_prev;
        mpz_class m = a * m_cur + m_prev;
        n_prev = n_cur;
        m_prev = m_cur;
        n_cur = n;
        m_cur = m;
        cf.quotients.push_back(a);
        cf.convergents.push_back(make_rational(n, m));
    }
};

}  // namespace

ContinuedFraction cf_expand(const Rational& x, int max_terms) {
    if (max_terms < 1) throw std::invalid_argument("cf_expand: max_terms >= 1 required");
    ContinuedFraction cf;
    ConvergentBuilder b;
    mpz_class num = x.get_num(), den = x.get_den();
    for (int k = 0; k < max_terms; ++k) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        b.push(cf, a);
        if (sgn(r) == 0) {
            cf.terminated = true;
            break;
        }
        num = den;
        den = r;
    }
    return cf;
}

ContinuedFraction cf_expand(const QuadFieldElement& x, int max_terms) {
    if (max_terms < 1) throw std::invalid_argument("cf_expand: max_terms >= 1 required");
    if (x.is_rational()) return cf_expand(x.to_rational(), max_terms);
    ContinuedFraction cf;
    ConvergentBuilder b;
    QuadFieldElement cur = x;
    for (int k = 0; k < max_terms; ++k) {
        mpz_class a = cur.floor_exact();
        b.push(cf, a);
        QuadFieldElement frac = cur - QuadFieldElement::rational(x.field(), Rational(a));
        if (frac.is_zero()) {
            cf.terminated = true;
            break;
        }
        cur = frac.inverse();
    }
    return cf;
}

ContinuedFraction cf_expand(const Real& x, int max_terms) {
    if (max_terms < 1) throw std::invalid_argument("cf_expand: max_terms >= 1 required");
    ContinuedFraction cf;
    ConvergentBuilder b;
    // Guard band of one ulp on each side; all further steps use outward
    // rounding, so every emitted quotient is certain.
    Real lo = x, hi = x;
    mpfr_nextbelow(lo.raw());
    mpfr_nextabove(hi.raw());
    Interval cur{lo, hi};
    for (int k = 0; k < max_terms; ++k) {
        mpz_class a;
        if (!cur.floor_certain(a))
            throw PrecisionExhausted("cf_expand: quotient " + std::to_string(k) +
                                     " uncertain at precision " + std::to_string(x.precision()));
        b.push(cf, a);
        Interval frac = cur.sub_z(a);
        if (frac.contains_zero()) {
            // Cannot distinguish exact termination from exhaustion; the next
            // quotient is uncertain either way.
            if (k + 1 < max_terms)
                throw PrecisionExhausted("cf_expand: remainder indistinguishable from zero after term " +
                                         std::to_string(k));
            break;
        }
        cur = frac.recip();
    }
    return cf;
}

}  // namespace ria
