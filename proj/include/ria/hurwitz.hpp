#pragma once

#include <optional>

#include "ria/continued_fraction.hpp"

namespace ria {

/// A convergent n/m of an irrational h with |h - n/m| < 1/(sqrt(5) m^2).
/// Infinitely many exist; at least one of any three consecutive convergents
/// qualifies.
struct HurwitzApproximant {
    mpz_class n;
    mpz_class m;                              // > 0
    Real delta;                               // h - n/m at default precision
    std::optional<QuadFieldElement> delta_exact;  // present for exact inputs
};

/// Qualifying convergent with the smallest denominator m >= m_min.
/// The inequality is decided exactly (sign of 5 m^4 (h - n/m)^2 - 1).
HurwitzApproximant hurwitz_select(const QuadFieldElement& h, const mpz_class& m_min);

/// Numeric variant; inequality certified by interval arithmetic, throws
/// PrecisionExhausted when undecidable and std::domain_error for rational h.
HurwitzApproximant hurwitz_select(const Real& h, const mpz_class& m_min);

}  // namespace ria
