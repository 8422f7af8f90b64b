#pragma once

#include <vector>

#include "ria/quad_field.hpp"
#include "ria/rational.hpp"

namespace ria {

/// Rank over Q of a set of coordinate vectors (fraction-free Bareiss
/// elimination on the denominator-cleared integer matrix).
int rational_rank_coords(const std::vector<std::vector<Rational>>& rows);

/// Rank over Q of field elements: the rational dimension of the set.
/// All elements must share a field descriptor; list must be nonempty.
int rational_rank(const std::vector<QuadFieldElement>& elements);

/// Basis extraction for interference aggregation: RREF basis of the span of
/// the inputs plus, per input, its rational coefficients over that basis.
/// input[i] = sum_l coeffs[i][l] * basis[l].
struct RationalDecomposition {
    std::vector<std::vector<Rational>> basis_coords;  // rank x dim, RREF rows
    std::vector<std::vector<Rational>> coeffs;        // n x rank
    int rank = 0;
};

RationalDecomposition rational_decompose(const std::vector<std::vector<Rational>>& rows);

}  // namespace ria
