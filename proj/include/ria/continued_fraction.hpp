#pragma once

#include <vector>

#include "ria/quad_field.hpp"
#include "ria/rational.hpp"
#include "ria/real.hpp"

namespace ria {

/// Simple continued fraction [a0; a1, a2, ...] with convergents n_k/m_k
/// satisfying n_k = a_k n_{k-1} + n_{k-2}, m_k = a_k m_{k-1} + m_{k-2}.
struct ContinuedFraction {
    std::vector<mpz_class> quotients;
    std::vector<Rational> convergents;  // canonical, so gcd(n_k, m_k) = 1
    bool terminated = false;            // expansion ended exactly (rational target)
};

/// Exact expansion of a rational target (Euclidean division chain).
ContinuedFraction cf_expand(const Rational& x, int max_terms);

/// Exact expansion of a field element (floors certified exactly).
ContinuedFraction cf_expand(const QuadFieldElement& x, int max_terms);

/// Expansion of a numeric target.  The value is trusted only to its own
/// precision (one-ulp guard band); throws PrecisionExhausted as soon as a
/// quotient cannot be certified, never returns a wrong quotient.
ContinuedFraction cf_expand(const Real& x, int max_terms);

}  // namespace ria
