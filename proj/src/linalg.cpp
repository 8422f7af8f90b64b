#include "ria/linalg.hpp"

#include <stdexcept>

namespace ria {

int rational_rank_coords(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    size_t n = rows.size(), dim = rows[0].size();
    // Clear denominators row-wise; scaling a row by a nonzero rational
    // preserves rank.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(dim));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != dim) throw std::invalid_argument("ragged coordinate matrix");
        mpz_class l(1);
        for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        for (size_t j = 0; j < dim; ++j) {
            Rational scaled = rows[i][j] * Rational(l);
            m[i][j] = scaled.get_num();
        }
    }
    // Bareiss fraction-free elimination.
    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < n; ++i) {
            for (size_t j = col + 1; j < dim; ++j) {
                mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return int(rank);
}

int rational_rank(const std::vector<QuadFieldElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("rational_rank: empty set");
    const QuadField& f = elements.front().field();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(elements.size());
    for (const auto& e : elements) {
        if (e.field() != f) throw std::invalid_argument("rational_rank: mismatched field descriptors");
        rows.push_back({e.coord(0), e.coord(1), e.coord(2), e.coord(3)});
    }
    return rational_rank_coords(rows);
}

RationalDecomposition rational_decompose(const std::vector<std::vector<Rational>>& rows) {
    RationalDecomposition out;
    if (rows.empty()) return out;
    size_t n = rows.size(), dim = rows[0].size();
    std::vector<std::vector<Rational>> m = rows;
    // Gauss-Jordan to reduced row echelon form (exact rational arithmetic).
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t col = 0; col < dim && r < n; ++col) {
        size_t piv = r;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][col];
        for (size_t j = col; j < dim; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || sgn(m[i][col]) == 0) continue;
            Rational factor = m[i][col];
            for (size_t j = col; j < dim; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    out.rank = int(r);
    for (size_t i = 0; i < r; ++i) out.basis_coords.push_back(m[i]);
    // With RREF basis (identity on pivot columns), input i's coefficient on
    // basis row l is just its entry at pivot column l.
    out.coeffs.assign(n, std::vector<Rational>(r));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < r; ++l) out.coeffs[i][l] = rows[i][pivot_cols[l]];
    return out;
}

}  // namespace ria
