#include <doctest.h>

#include <cmath>
#include <functional>

#include "ria/linalg.hpp"
#include "ria/quad_field.hpp"
#include "ria/random.hpp"
#include "ria/real.hpp"

using namespace ria;

namespace {

const QuadField F23(2, 3);

QuadFieldElement qr(const Rational& q) { return QuadFieldElement::rational(F23, q); }
QuadFieldElement s2() { return QuadFieldElement::sqrt_d1(F23); }
QuadFieldElement s3() { return QuadFieldElement::sqrt_d2(F23); }

// Random small nonzero element with coordinates in [-5, 5] / [1, 4].
QuadFieldElement random_element(RandomSource& rng) {
    for (;;) {
        QuadFieldElement e(F23, make_rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4)),
                           make_rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4)),
                           make_rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4)),
                           make_rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4)));
        if (!e.is_zero()) return e;
    }
}

// Rank as the largest size of a nonsingular square minor (independent of the
// elimination path used by rational_rank_coords).
int minor_rank(const std::vector<std::vector<Rational>>& rows) {
    size_t n = rows.size(), d = rows[0].size();
    auto det = [&](const std::vector<size_t>& ri, const std::vector<size_t>& ci) {
        size_t k = ri.size();
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m[i][j] = rows[ri[i]][ci[j]];
        // Laplace for k <= 4 via elimination with exact rationals.
        Rational result(1);
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && sgn(m[piv][col]) == 0) ++piv;
            if (piv == k) return Rational(0);
            if (piv != col) {
                std::swap(m[piv], m[col]);
                result = -result;
            }
            result *= m[col][col];
            for (size_t i = col + 1; i < k; ++i) {
                Rational f = m[i][col] / m[col][col];
                for (size_t j = col; j < k; ++j) m[i][j] -= f * m[col][j];
            }
        }
        return result;
    };
    for (int k = int(std::min(n, d)); k >= 1; --k) {
        std::vector<size_t> ri(static_cast<size_t>(k), 0);
        std::vector<size_t> ci(static_cast<size_t>(k), 0);
        std::function<bool(size_t, size_t)> pick_rows = [&](size_t pos, size_t start) -> bool {
            if (pos == size_t(k)) {
                std::function<bool(size_t, size_t)> pick_cols = [&](size_t cpos, size_t cstart) -> bool {
                    if (cpos == size_t(k)) return sgn(det(ri, ci)) != 0;
                    for (size_t c = cstart; c < d; ++c) {
                        ci[cpos] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (size_t r = start; r < n; ++r) {
                ri[pos] = r;
                if (pick_rows(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("field multiplication table") {
    CHECK(s2() * s3() == QuadFieldElement::sqrt_d1d2(F23));
    QuadFieldElement one_plus = qr(Rational(1)) + s2();
    CHECK(one_plus * one_plus == qr(Rational(3)) + s2().scale(Rational(2)));
    QuadFieldElement inv = s2().inverse();
    CHECK(inv == s2().scale(make_rational(1, 2)));
    CHECK(inv * s2() == qr(Rational(1)));
}

TEST_CASE("field inverse round trip (seeded)") {
    RandomSource rng(101);
    for (int i = 0; i < 200; ++i) {
        QuadFieldElement a = random_element(rng);
        QuadFieldElement b = random_element(rng);
        CHECK((a * b) * b.inverse() == a);
    }
}

TEST_CASE("mismatched fields rejected") {
    QuadField other(2, 5);
    CHECK_THROWS_AS((void)(s2() + QuadFieldElement::sqrt_d1(other)), std::invalid_argument);
    CHECK_THROWS_AS(qr(Rational(0)).inverse(), std::domain_error);
}

TEST_CASE("qf_to_real rational and zero") {
    Real v = qr(make_rational(7, 5)).to_real(192);
    CHECK(v == Real::of(make_rational(7, 5), 192));
    CHECK(qr(Rational(0)).to_real(128).is_zero());
}

TEST_CASE("qf_to_real agrees across precisions") {
    Real lo = s2().to_real(192);
    Real hi = s2().to_real(256);
    Real diff = (lo - hi).abs();
    Real budget = hi.abs() * Real::of(2.0, 64).pow(Real::of(-180L, 64));
    CHECK(diff <= budget);
}

TEST_CASE("qf_to_real survives deep cancellation") {
    // 1 + sqrt2 - (close rational) leaves a tiny value; the bound must hold.
    Rational close("577/408");  // sqrt(2) ~ 577/408 within 1e-6
    QuadFieldElement tiny = s2() - qr(close);
    Real v = tiny.to_real(192);
    double expect = std::sqrt(2.0) - 577.0 / 408.0;
    CHECK(v.to_double() == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("exact floor and sign") {
    CHECK(s2().floor_exact() == 1);
    CHECK((s2() + s3()).floor_exact() == 3);  // 3.146...
    CHECK((-s2()).floor_exact() == -2);
    CHECK(qr(make_rational(-7, 2)).floor_exact() == -4);
    CHECK(s2().sign() == 1);
    CHECK((-s3()).sign() == -1);
    CHECK(qr(Rational(0)).sign() == 0);
    // sqrt6 vs sqrt2*sqrt3: identical, difference sign 0
    CHECK((s2() * s3() - QuadFieldElement::sqrt_d1d2(F23)).sign() == 0);
}

TEST_CASE("rational_rank examples") {
    CHECK(rational_rank({qr(Rational(1)), qr(Rational(2)), qr(Rational(3))}) == 1);
    CHECK(rational_rank({qr(Rational(1)), s2()}) == 2);
    // X-channel receiver-1 normalized basis for gains (1, sqrt2, sqrt3, 1).
    CHECK(rational_rank({qr(Rational(1)), QuadFieldElement::sqrt_d1d2(F23), s2()}) == 3);
    CHECK(rational_rank({qr(Rational(1)), s2(), s3(), QuadFieldElement::sqrt_d1d2(F23)}) == 4);
}

TEST_CASE("rational_rank vs minor oracle (seeded)") {
    RandomSource rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = size_t(rng.uniform_int(1, 5));
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(4));
        for (auto& r : rows)
            for (auto& c : r) c = make_rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
        CHECK(rational_rank_coords(rows) == minor_rank(rows));
    }
}

TEST_CASE("rational_rank invariances") {
    RandomSource rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QuadFieldElement> xs;
        size_t n = size_t(rng.uniform_int(1, 4));
        for (size_t i = 0; i < n; ++i) xs.push_back(random_element(rng));
        int r = rational_rank(xs);
        // permutation
        std::vector<QuadFieldElement> perm(xs.rbegin(), xs.rend());
        CHECK(rational_rank(perm) == r);
        // common nonzero rational scaling
        Rational c = make_rational(rng.uniform_int(1, 7), rng.uniform_int(1, 7));
        std::vector<QuadFieldElement> scaled;
        for (const auto& x : xs) scaled.push_back(x.scale(c));
        CHECK(rational_rank(scaled) == r);
    }
    RandomSource single(1);
    CHECK(rational_rank({random_element(single)}) == 1);
}

TEST_CASE("rank of rationals is at most 1") {
    std::vector<QuadFieldElement> xs;
    for (long v : {3L, -5L, 7L, 1L}) xs.push_back(qr(Rational(v)));
    CHECK(rational_rank(xs) == 1);
}

TEST_CASE("gaussian determinism and moments") {
    RandomSource a(42, 9), b(42, 9);
    for (int i = 0; i < 100; ++i) CHECK(a.gaussian(1.0) == b.gaussian(1.0));
    CHECK(a.gaussian(0.0) == 0.0);
    CHECK_THROWS_AS(a.gaussian(-1.0), std::invalid_argument);

    RandomSource c(42, 10);
    double sum = 0, sum2 = 0;
    const int N = 1'000'000;
    for (int i = 0; i < N; ++i) {
        double z = c.gaussian(1.0);
        sum += z;
        sum2 += z * z;
    }
    double mean = sum / N;
    double var = sum2 / N - mean * mean;
    CHECK(std::fabs(var - 1.0) < 0.01);
    CHECK(std::fabs(mean) < 0.005);
}

TEST_CASE("random streams differ and derive is stable") {
    RandomSource a(7, 0), b(7, 1);
    bool all_equal = true;
    for (int i = 0; i < 16; ++i) all_equal = all_equal && (a.next_u64() == b.next_u64());
    CHECK(!all_equal);
    RandomSource p(9, 4);
    CHECK(p.derive(3).next_u64() == p.derive(3).next_u64());
    CHECK(p.derive(3).next_u64() != p.derive(4).next_u64());
}

TEST_CASE("real precision rules") {
    Real a = Real::of(1.0, 128);
    Real b = Real::of(3.0, 256);
    CHECK((a / b).precision() == 256);  // never silently downgrades
    CHECK(Real::of(2L, 192).sqrt().precision() == 192);
    CHECK_THROWS_AS(set_default_precision(32), std::invalid_argument);
}
