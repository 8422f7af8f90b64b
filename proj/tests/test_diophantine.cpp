#include <doctest.h>

#include <cmath>

#include "ria/continued_fraction.hpp"
#include "ria/errors.hpp"
#include "ria/hurwitz.hpp"
#include "ria/khintchine.hpp"
#include "ria/random.hpp"

using namespace ria;

namespace {

const QuadField F23(2, 3);
const QuadField F52(5, 2);

QuadFieldElement sqrt2() { return QuadFieldElement::sqrt_d1(F23); }
QuadFieldElement golden() {
    return QuadFieldElement(F52, make_rational(1, 2), make_rational(1, 2), Rational(0), Rational(0));
}

// Straightforward double-precision brute force over the whole lattice; the
// production estimator must reproduce it on small boxes.
double kappa_brute(const std::vector<double>& alpha, double eps, int64_t Qmax) {
    int m = int(alpha.size());
    double best = HUGE_VAL;
    std::vector<int64_t> q(size_t(m), -Qmax);
    for (;;) {
        bool nonzero = false;
        for (int64_t v : q) nonzero = nonzero || v != 0;
        if (nonzero) {
            double t = 0;
            int64_t M = 0;
            for (int i = 0; i < m; ++i) {
                t += alpha[size_t(i)] * double(q[size_t(i)]);
                M = std::max<int64_t>(M, std::llabs(q[size_t(i)]));
            }
            double v = std::fabs(t - std::nearbyint(t));
            best = std::min(best, v * std::pow(double(M), m + eps));
        }
        int i = m - 1;
        while (i >= 0 && q[size_t(i)] == Qmax) q[size_t(i--)] = -Qmax;
        if (i < 0) break;
        ++q[size_t(i)];
    }
    return best;
}

}  // namespace

TEST_CASE("cf of 7/5 terminates as [1;2,2]") {
    ContinuedFraction cf = cf_expand(make_rational(7, 5), 10);
    CHECK(cf.terminated);
    REQUIRE(cf.quotients.size() == 3);
    CHECK(cf.quotients[0] == 1);
    CHECK(cf.quotients[1] == 2);
    CHECK(cf.quotients[2] == 2);
    CHECK(cf.convergents.back() == make_rational(7, 5));
}

TEST_CASE("cf of sqrt2") {
    ContinuedFraction cf = cf_expand(sqrt2(), 6);
    CHECK(!cf.terminated);
    REQUIRE(cf.quotients.size() == 6);
    CHECK(cf.quotients[0] == 1);
    for (size_t i = 1; i < 6; ++i) CHECK(cf.quotients[i] == 2);
    std::vector<std::pair<long, long>> expect = {{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}};
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(cf.convergents[i] == make_rational(expect[i].first, expect[i].second));
    // recurrence invariant
    for (size_t k = 2; k < cf.convergents.size(); ++k) {
        CHECK(cf.convergents[k].get_num() ==
              cf.quotients[k] * cf.convergents[k - 1].get_num() + cf.convergents[k - 2].get_num());
        CHECK(cf.convergents[k].get_den() ==
              cf.quotients[k] * cf.convergents[k - 1].get_den() + cf.convergents[k - 2].get_den());
    }
    // |h - n_k/m_k| < 1/(m_k m_{k+1})
    double h = std::sqrt(2.0);
    for (size_t k = 0; k + 1 < cf.convergents.size(); ++k) {
        double mk = cf.convergents[k].get_den().get_d();
        double mk1 = cf.convergents[k + 1].get_den().get_d();
        double err = std::fabs(h - cf.convergents[k].get_d());
        CHECK(err < 1.0 / (mk * mk1));
    }
}

TEST_CASE("cf of the golden ratio is all ones") {
    ContinuedFraction cf = cf_expand(golden(), 12);
    for (const auto& a : cf.quotients) CHECK(a == 1);
    // convergents are ratios of consecutive Fibonacci numbers
    CHECK(cf.convergents[10] == make_rational(144, 89));
}

TEST_CASE("numeric cf respects the guard band") {
    Real x = Real::of(2L, 192).sqrt();
    ContinuedFraction cf = cf_expand(x, 20);
    for (const auto& a : cf.quotients) CHECK((a == 1 || a == 2));
    // low precision must fail loudly, not emit wrong quotients
    Real coarse = Real::of(2L, 64).sqrt();
    CHECK_THROWS_AS(cf_expand(coarse, 64), PrecisionExhausted);
}

TEST_CASE("every convergent obeys |h - n/m| < 1/m^2") {
    for (const auto& h : {sqrt2(), golden()}) {
        ContinuedFraction cf = cf_expand(h, 10);
        Real hv = h.to_real(256);
        for (const auto& c : cf.convergents) {
            Real err = (hv - Real::of(c, 256)).abs();
            Real bound = Real::of(1L, 256) / Real::of(mpz_class(c.get_den() * c.get_den()), 256);
            CHECK(err < bound);
        }
    }
}

TEST_CASE("hurwitz_select picks the stated approximants") {
    HurwitzApproximant a = hurwitz_select(sqrt2(), 3);
    CHECK(a.n == 7);
    CHECK(a.m == 5);
    // numeric inequality check at double precision
    CHECK(std::fabs(std::sqrt(2.0) - 1.4) < 1.0 / (std::sqrt(5.0) * 25));

    HurwitzApproximant b = hurwitz_select(golden(), 5);
    CHECK(b.n == 13);
    CHECK(b.m == 8);  // 8/5 fails the inequality, 13/8 passes
    double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::fabs(phi - 8.0 / 5.0) > 1.0 / (std::sqrt(5.0) * 25));
    CHECK(std::fabs(phi - 13.0 / 8.0) < 1.0 / (std::sqrt(5.0) * 64));
}

TEST_CASE("hurwitz_select rejects rationals") {
    CHECK_THROWS_AS(hurwitz_select(QuadFieldElement::rational(F23, make_rational(7, 5)), 1),
                    std::domain_error);
}

TEST_CASE("hurwitz output invariants") {
    for (const auto& h : {sqrt2(), golden(), QuadFieldElement::sqrt_d2(F23)}) {
        for (long m_min : {1L, 2L, 10L, 50L}) {
            HurwitzApproximant a = hurwitz_select(h, m_min);
            CHECK(a.m >= m_min);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.n.get_mpz_t(), a.m.get_mpz_t());
            CHECK(g == 1);
            // |delta| < 1/(sqrt5 m^2), decided exactly
            QuadFieldElement diff = *a.delta_exact;
            Rational m4 = Rational(a.m) * a.m * a.m * a.m * 5;
            QuadFieldElement crit =
                (diff * diff).scale(m4) - QuadFieldElement::rational(h.field(), Rational(1));
            CHECK(crit.sign() < 0);
        }
    }
}

TEST_CASE("numeric hurwitz agrees with exact") {
    Real h = Real::of(2L, 256).sqrt();
    HurwitzApproximant a = hurwitz_select(h, 20);
    CHECK(a.n == 41);
    CHECK(a.m == 29);
}

TEST_CASE("khintchine: rational alpha hits zero with canonical witness") {
    std::vector<Real> alpha = {Real::of(0.5)};
    KhintchineEstimate est = khintchine_kappa(alpha, 0.2, 8);
    CHECK(est.kappa_hat.is_zero());
    CHECK(est.p == -1);
    REQUIRE(est.q.size() == 1);
    CHECK(est.q[0] == 2);
    CHECK(khintchine_eval(alpha, 0.2, est.p, est.q).is_zero());
}

TEST_CASE("khintchine: sqrt2-1 stays positive") {
    std::vector<Real> alpha = {Real::of(std::sqrt(2.0) - 1.0)};
    KhintchineEstimate est = khintchine_kappa(alpha, 0.2, 64);
    CHECK(!est.kappa_hat.is_zero());
    CHECK(est.kappa_hat.to_double() > 0);
}

TEST_CASE("khintchine matches the plain brute-force oracle") {
    RandomSource rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        int m = 1 + trial % 2;
        std::vector<Real> alpha;
        std::vector<double> ad;
        for (int i = 0; i < m; ++i) {
            double v = rng.uniform01() * 2.5;
            alpha.push_back(Real::of(v));
            ad.push_back(v);
        }
        int64_t Qmax = 24;
        KhintchineEstimate est = khintchine_kappa(alpha, 0.2, Qmax);
        double oracle = kappa_brute(ad, 0.2, Qmax);
        CHECK(est.kappa_hat.to_double() == doctest::Approx(oracle).epsilon(1e-9));
        // witness substitution reproduces kappa_hat exactly
        CHECK(khintchine_eval(alpha, 0.2, est.p, est.q) == est.kappa_hat);
    }
}

TEST_CASE("khintchine is nonincreasing in Qmax") {
    RandomSource rng(31337);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Real> alpha = {Real::of(rng.uniform01()), Real::of(rng.uniform01())};
        auto profile = khintchine_kappa_profile(alpha, 0.2, {16, 32, 64, 128});
        for (size_t i = 1; i < profile.size(); ++i)
            CHECK(profile[i].kappa_hat <= profile[i - 1].kappa_hat);
        // single-shot calls agree with the profile
        KhintchineEstimate solo = khintchine_kappa(alpha, 0.2, 64);
        CHECK(solo.kappa_hat == profile[2].kappa_hat);
    }
}
