#pragma once

#include <gmpxx.h>

#include <string>

namespace ria {

/// Exact rational. gmp's mpq_class keeps gcd(|num|, den) = 1 and den >= 1
/// once canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n", "n/d" or a decimal like "0.25" (exact binary-free decimal).
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

/// Nearest integer to q; exact .5 ties round away from zero.
mpz_class round_nearest(const Rational& q);

mpz_class floor_q(const Rational& q);
mpz_class ceil_q(const Rational& q);

}  // namespace ria
