#include "ria/hurwitz.hpp"

#include <stdexcept>

#include "ria/errors.hpp"

namespace ria {

namespace {
constexpr int kTermBatch = 64;
constexpr int kTermCap = 4096;
}

HurwitzApproximant hurwitz_select(const QuadFieldElement& h, const mpz_class& m_min) {
    if (h.is_rational()) throw std::domain_error("hurwitz_select: rational input " + h.str());
    if (m_min < 1) throw std::invalid_argument("hurwitz_select: m_min >= 1 required");
    for (int terms = kTermBatch; terms <= kTermCap; terms *= 2) {
        ContinuedFraction cf = cf_expand(h, terms);
        for (const auto& conv : cf.convergents) {
            const mpz_class& m = conv.get_den();
            if (m < m_min) continue;
            // |h - n/m| < 1/(sqrt5 m^2)  <=>  5 m^4 (h - n/m)^2 - 1 < 0.
            QuadFieldElement diff = h - QuadFieldElement::rational(h.field(), conv);
            Rational m4 = Rational(m) * m * m * m * 5;
            QuadFieldElement crit = (diff * diff).scale(m4) -
                                    QuadFieldElement::rational(h.field(), Rational(1));
            if (crit.sign() < 0) {
                HurwitzApproximant out;
                out.n = conv.get_num();
                out.m = m;
                out.delta_exact = diff;
                out.delta = diff.to_real();
                return out;
            }
        }
    }
    throw PrecisionExhausted("hurwitz_select: no qualifying convergent found (term cap)");
}

HurwitzApproximant hurwitz_select(const Real& h, const mpz_class& m_min) {
    if (m_min < 1) throw std::invalid_argument("hurwitz_select: m_min >= 1 required");
    ContinuedFraction cf;
    try {
        cf = cf_expand(h, kTermCap);
    } catch (const PrecisionExhausted&) {
        cf = ContinuedFraction{};  // rebuilt below with what is certain
    }
    if (cf.convergents.empty()) {
        // Retry, keeping only the certified prefix.
        for (int terms = kTermBatch; terms >= 1; terms /= 2) {
            try {
                cf = cf_expand(h, terms);
                break;
            } catch (const PrecisionExhausted&) {
            }
        }
    }
    if (cf.terminated) throw std::domain_error("hurwitz_select: rational input");
    mpfr_prec_t p = h.precision();
    for (const auto& conv : cf.convergents) {
        const mpz_class& m = conv.get_den();
        if (m < m_min) continue;
        Real lo = h, hi = h;
        mpfr_nextbelow(lo.raw());
        mpfr_nextabove(hi.raw());
        Interval diff = Interval{lo, hi} - Interval::of_q(conv, p);
        Interval crit = diff * diff;
        mpz_class m4z = m * m * m * m * 5;
        crit = crit.mul_z(m4z).sub_z(1);
        if (crit.hi.sgn() < 0) {
            HurwitzApproximant out;
            out.n = conv.get_num();
            out.m = m;
            out.delta = h - Real::of(conv, p);
            return out;
        }
        if (crit.lo.sgn() <= 0 && crit.hi.sgn() >= 0)
            throw PrecisionExhausted("hurwitz_select: inequality undecidable at precision " +
                                     std::to_string(p));
    }
    throw PrecisionExhausted("hurwitz_select: certified quotients exhausted before a qualifying convergent");
}

}  // namespace ria
