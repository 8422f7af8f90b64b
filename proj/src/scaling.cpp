#include "ria/scaling.hpp"

#include <stdexcept>

#include "ria/errors.hpp"

namespace ria {

mpz_class floor_snapped(const Real& x) {
    Real r = x;
    mpfr_t nearest;
    mpfr_init2(nearest, mpfr_get_prec(x.raw()));
    mpfr_round(nearest, x.raw());
    mpfr_sub(r.raw(), x.raw(), nearest, MPFR_RNDN);
    Real scale = x.abs();
    if (scale < Real::of(1L, 64)) scale = Real::of(1L, 64);
    // Wide enough to absorb double-carried inputs (P arrives as a double, so
    // designed-integer grid expressions land within ~2^-52 of the integer),
    // narrow enough never to snap a genuinely fractional value.
    bool snap = r.abs() <= scale * Real::of(2.0, 64).pow(Real::of(-48L, 64));
    mpz_class out;
    if (snap) {
        mpfr_get_z(out.get_mpz_t(), nearest, MPFR_RNDN);
    } else {
        mpfr_get_z(out.get_mpz_t(), x.raw(), MPFR_RNDD);
    }
    mpfr_clear(nearest);
    return out;
}

PowerScaling scaling(double P, double epsilon, int m, double gamma, double gamma_prime) {
    if (P <= 0) throw std::invalid_argument("scaling: P > 0 required");
    if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("scaling: 0 < epsilon < 1/2 required");
    if (m < 1) throw std::invalid_argument("scaling: m >= 1 required");
    if (gamma <= 0 || gamma_prime <= 0) throw std::invalid_argument("scaling: gamma, gamma' > 0 required");
    mpfr_prec_t prec = default_precision();
    Real rp = Real::of(P, prec);
    Real q_exp = Real::of(1.0 - epsilon, prec) / Real::of(2.0 * (m + 1 + epsilon), prec);
    Real a_exp = Real::of(m + 2.0 * epsilon, prec) / Real::of(2.0 * (m + 1 + epsilon), prec);
    PowerScaling s;
    s.P = P;
    s.epsilon = epsilon;
    s.m = m;
    s.gamma = gamma;
    s.gamma_prime = gamma_prime;
    mpz_class qz = floor_snapped(Real::of(gamma, prec) * rp.pow(q_exp));
    if (!qz.fits_slong_p()) throw std::overflow_error("scaling: Q too large");
    s.Q = qz.get_si();
    s.amplitude = Real::of(gamma_prime, prec) * rp.pow(a_exp);
    return s;
}

RationalSelection select_rational_gain(const Rational& h) {
    if (sgn(h) <= 0) throw std::invalid_argument("select_rational_gain: h > 0 required");
    RationalSelection t;
    t.h = h;
    t.n = h.get_num();
    t.m = h.get_den();
    if (2 * t.n >= t.m) {
        t.case_tag = RationalSelection::Case::I;
        t.a = t.n;
        t.W = t.n * (2 * t.n - 1);
    } else if (t.m % 2 == 1) {
        t.case_tag = RationalSelection::Case::II;
        t.s = (t.m - 1) / 2;
        t.a = t.s + 1;
        t.W = (t.s + 1) * (2 * t.s + 1);
    } else {
        t.case_tag = RationalSelection::Case::III;
        t.s = t.m / 2;
        t.a = t.s;
        t.W = 2 * t.s * t.s - t.n;
    }
    t.degenerate = (t.a <= 1 || t.W <= 1);
    return t;
}

const char* case_name(RationalSelection::Case c) {
    switch (c) {
        case RationalSelection::Case::I: return "I";
        case RationalSelection::Case::II: return "II";
        case RationalSelection::Case::III: return "III";
    }
    return "?";
}

namespace {

// floor(m^(1-eps) sqrt5 / 4) certified by interval refinement.
mpz_class digit_bound_a(const mpz_class& m, double epsilon) {
    for (mpfr_prec_t p = 192; p <= (mpfr_prec_t(1) << 16); p *= 2) {
        mpfr_t mm, e, lo, hi, s5lo, s5hi;
        mpfr_inits2(p, mm, e, lo, hi, s5lo, s5hi, (mpfr_ptr) nullptr);
        mpfr_set_z(mm, m.get_mpz_t(), MPFR_RNDN);
        mpfr_set_d(e, 1.0 - epsilon, MPFR_RNDN);  // exact double
        mpfr_pow(lo, mm, e, MPFR_RNDD);
        mpfr_pow(hi, mm, e, MPFR_RNDU);
        mpfr_sqrt_ui(s5lo, 5, MPFR_RNDD);
        mpfr_sqrt_ui(s5hi, 5, MPFR_RNDU);
        mpfr_mul(lo, lo, s5lo, MPFR_RNDD);
        mpfr_mul(hi, hi, s5hi, MPFR_RNDU);
        mpfr_div_ui(lo, lo, 4, MPFR_RNDD);
        mpfr_div_ui(hi, hi, 4, MPFR_RNDU);
        mpz_class fl, fh;
        mpfr_get_z(fl.get_mpz_t(), lo, MPFR_RNDD);
        mpfr_get_z(fh.get_mpz_t(), hi, MPFR_RNDD);
        mpfr_clears(mm, e, lo, hi, s5lo, s5hi, (mpfr_ptr) nullptr);
        if (fl == fh) return fl;
    }
    throw PrecisionExhausted("select_irrational: digit bound floor undecided");
}

}  // namespace

IrrationalSelection select_irrational(const QuadFieldElement& h, double epsilon, const mpz_class& m_min) {
    if (h.is_rational()) throw std::domain_error("select_irrational: rational input " + h.str());
    if (epsilon <= 0) throw std::invalid_argument("select_irrational: epsilon > 0 required");
    if (m_min < 2) throw std::invalid_argument("select_irrational: m_min >= 2 required");
    IrrationalSelection sel;
    sel.approximant = hurwitz_select(h, m_min);
    sel.epsilon = epsilon;
    const mpz_class& m = sel.approximant.m;
    sel.a = digit_bound_a(m, epsilon);

    const QuadField& f = h.field();
    QuadFieldElement delta = *sel.approximant.delta_exact;
    QuadFieldElement abs_delta = delta.sign() < 0 ? -delta : delta;
    Rational inv_m = make_rational(mpz_class(1), m);
    Rational four_am1 = Rational(4) * Rational(sel.a - 1);
    sel.margin_exact = QuadFieldElement::rational(f, inv_m) - abs_delta.scale(four_am1);
    if (sel.margin_exact.sign() <= 0)
        throw std::logic_error("select_irrational: margin not positive (Hurwitz chain violated)");
    sel.margin = sel.margin_exact.to_real();

    // W = ceil(2 (1+2h) (a-1) / margin) + 1, decided exactly.
    QuadFieldElement one = QuadFieldElement::rational(f, Rational(1));
    QuadFieldElement numer = (one + h.scale(Rational(2))).scale(Rational(2) * Rational(sel.a - 1));
    QuadFieldElement ratio = numer * sel.margin_exact.inverse();
    sel.W = ratio.ceil_exact() + 1;
    return sel;
}

double dof_rational_formula(const Rational& h) {
    RationalSelection t = select_rational_gain(h);
    if (t.degenerate) return 0.0;
    Real a = Real::of(t.a, 128);
    Real w = Real::of(t.W, 128);
    return (a.log().mul_si(3) / w.log()).to_double();
}

Real multilayer_amplitude(int64_t W, int64_t a, int L, double P) {
    if (W < 2 || a < 1 || a >= W || L < 1) throw std::invalid_argument("multilayer_amplitude: bad (W,a,L)");
    if (P <= 0) throw std::invalid_argument("multilayer_amplitude: P > 0 required");
    mpfr_prec_t prec = default_precision();
    mpz_class w2m1 = mpz_class(W) * W - 1;
    mpz_class wl;
    mpz_ui_pow_ui(wl.get_mpz_t(), unsigned(W), unsigned(L));
    Real num = (Real::of(w2m1, prec) * Real::of(P, prec)).sqrt();
    mpz_class awl = mpz_class(a) * wl;
    return num / Real::of(awl, prec);
}

int multilayer_levels(double P, double epsilon, int64_t W) {
    if (P <= 0) throw std::invalid_argument("multilayer_levels: P > 0 required");
    if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("multilayer_levels: 0 < epsilon < 1/2 required");
    if (W < 2) throw std::invalid_argument("multilayer_levels: W >= 2 required");
    mpfr_prec_t prec = default_precision();
    Real lp = Real::of(P, prec).log() * Real::of(0.5 - epsilon, prec);
    Real lw = Real::of(long(W), prec).log();
    mpz_class L = floor_snapped(lp / lw);
    if (L < 0) return 0;  // P too small for even one layer
    if (!L.fits_sint_p()) throw std::overflow_error("multilayer_levels: L too large");
    return int(L.get_si());
}

}  // namespace ria
