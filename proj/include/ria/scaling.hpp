#pragma once

#include <cstdint>

#include "ria/hurwitz.hpp"
#include "ria/quad_field.hpp"
#include "ria/rational.hpp"
#include "ria/real.hpp"

namespace ria {

/// Power-law scaling of the single-layer constellation radius and the
/// transmit amplitude against P for interference dimension m:
///   Q = floor(gamma * P^((1-eps)/(2(m+1+eps))))
///   amplitude = gamma' * P^((m+2eps)/(2(m+1+eps)))
struct PowerScaling {
    double P = 0;
    double epsilon = 0;
    int m = 0;
    double gamma = 1;
    double gamma_prime = 1;
    int64_t Q = 0;
    Real amplitude;
};

PowerScaling scaling(double P, double epsilon, int m, double gamma = 1.0, double gamma_prime = 1.0);

/// Base/digit-bound choice for a rational gain h = n/m (coprime) keeping the
/// three-user multilayer received constellation collision-free:
///   Case I   (2n >= m):            a = n,   W = n(2n-1)
///   Case II  (2n <  m, m = 2s+1):  a = s+1, W = (s+1)(2s+1)
///   Case III (2n <  m, m = 2s):    a = s,   W = 2s^2 - n
/// a <= 1 (or W <= 1) carries zero rate and is flagged, not rejected.
struct RationalSelection {
    Rational h;
    mpz_class n, m;
    enum class Case { I, II, III } case_tag = Case::I;
    mpz_class s;  // defined for cases II/III
    mpz_class a, W;
    bool degenerate = false;
};

RationalSelection select_rational_gain(const Rational& h);

const char* case_name(RationalSelection::Case c);

/// Base/digit-bound choice for an irrational gain via a Hurwitz approximant
/// n/m of h (delta = h - n/m):
///   a = floor(m^(1-eps) sqrt(5) / 4)
///   margin = 1/m - 4(a-1)|delta|        (positive by the Hurwitz chain)
///   W = ceil(2(1+2h)(a-1) / margin) + 1
struct IrrationalSelection {
    HurwitzApproximant approximant;
    double epsilon = 0;
    mpz_class a;
    mpz_class W;
    QuadFieldElement margin_exact;  // exact when h is a field element
    Real margin;
};

IrrationalSelection select_irrational(const QuadFieldElement& h, double epsilon, const mpz_class& m_min);

/// Achievable sum DOF for the symmetric three-user channel at rational gain,
/// 3 log a / log W of the table selection; 0 when degenerate.
double dof_rational_formula(const Rational& h);

/// A = sqrt((W^2-1) P) / (a W^L): mean transmit power of a uniform multilayer
/// point scaled by A stays below P.
Real multilayer_amplitude(int64_t W, int64_t a, int L, double P);

/// L = floor(log(P^(0.5-eps)) / log W).
int multilayer_levels(double P, double epsilon, int64_t W);

/// Floor with a snap guard: values that are integers by construction (e.g.
/// the W-aligned power grid) land exactly despite rounding.
mpz_class floor_snapped(const Real& x);

}  // namespace ria
