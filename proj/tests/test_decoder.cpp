#include <doctest.h>

#include <cmath>
#include <set>

#include "ria/errors.hpp"
#include "ria/gamma_scan.hpp"
#include "ria/models.hpp"
#include "ria/random.hpp"
#include "ria/simulate.hpp"

using namespace ria;

namespace {

const QuadField F23(2, 3);

Gain g_rat(long n, long d = 1) { return Gain::exact(QuadFieldElement::rational(F23, make_rational(n, d))); }
Gain g_sqrt2() { return Gain::exact(QuadFieldElement::sqrt_d1(F23)); }
Gain g_sqrt3() { return Gain::exact(QuadFieldElement::sqrt_d2(F23)); }

ChannelInstance x_example(double P) {
    ChannelInstance ch;
    ch.h = {{g_rat(1), g_sqrt2()}, {g_sqrt3(), g_rat(1)}};
    ch.P = P;
    ch.sigma2 = 1.0;
    return ch;
}

SymmetricMultilayerModel sym_unit(long n, long d, int64_t W, int64_t a, int L) {
    return symmetric_multilayer_model(g_rat(n, d), W, a, L, 100.0, 1.0, Real::of(1L));
}

}  // namespace

TEST_CASE("x channel tuple count at Q = 1") {
    XChannelModels xm = x_channel_models(x_example(100.0), 0.1);
    CHECK(xm.q_scaling.Q == 1);
    CHECK(xm.rx[0].tuple_count() == 45);  // 3 * 3 * 5
    ReceivedConstellation rc = enumerate_received(xm.rx[0]);
    CHECK(rc.gamma == GammaVerdict::Holds);
}

TEST_CASE("tuple cap is enforced with a memory estimate") {
    XChannelModels xm = x_channel_models(x_example(1e8), 0.1);
    EnumerateOptions opt;
    opt.tuple_cap = 100;
    CHECK_THROWS_AS(enumerate_received(xm.rx[0], opt), CapExceeded);
}

TEST_CASE("symmetric h=2/3 single layer: values, gamma, dmin") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 1);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    CHECK(rc.gamma == GammaVerdict::Holds);
    REQUIRE(rc.entries.size() == 6);
    std::vector<double> expect = {0, 2.0 / 3, 1, 4.0 / 3, 5.0 / 3, 7.0 / 3};
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(rc.entries[i].value == doctest::Approx(expect[i]).epsilon(1e-12));
    REQUIRE(rc.dmin_unit_exact.has_value());
    CHECK(*rc.dmin_unit_exact == make_rational(1, 3));
    CHECK(min_distance(rc).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("symmetric h=1 with a=2 violates gamma with a witness") {
    SymmetricMultilayerModel sm = sym_unit(1, 1, 6, 2, 1);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    CHECK(rc.gamma == GammaVerdict::Violated);
    REQUIRE(rc.gamma_witness.has_value());
    // the witness pair decodes to distinct (b, I) with equal values: 1 = 1+0 = 0+1
    auto [c1, c2] = *rc.gamma_witness;
    CHECK(c1 != c2);
}

TEST_CASE("gamma scan agrees with enumeration on small cases") {
    for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 3}, {1, 3}, {1, 4}, {3, 4}, {5, 2}}) {
        RationalSelection sel = select_rational_gain(make_rational(n, d));
        if (sel.degenerate) continue;
        for (int L = 1; L <= 2; ++L) {
            RationalGammaScan scan = gamma_rational_scan(n, d, sel.a.get_si(), sel.W.get_si(), L);
            SymmetricMultilayerModel sm = sym_unit(n, d, sel.W.get_si(), sel.a.get_si(), L);
            ReceivedConstellation rc = enumerate_received(sm.rx);
            CHECK(scan.holds == (rc.gamma == GammaVerdict::Holds));
            CHECK(scan.tuple_count == rc.model.tuple_count());
            if (scan.holds) {
                REQUIRE(rc.dmin_unit_exact.has_value());
                CHECK(*rc.dmin_unit_exact == make_rational(scan.min_gap, d));
            }
        }
    }
    // a = W forces per-level collisions; the scan finds the witness
    RationalGammaScan bad = gamma_rational_scan(1, 1, 2, 2, 1);
    CHECK(!bad.holds);
    CHECK(bad.witness.has_value());
}

TEST_CASE("irrational multilayer gamma holds exactly") {
    Gain h = g_sqrt2();
    SymmetricMultilayerModel sm = symmetric_multilayer_model(h, 10, 3, 2, 100.0, 1.0, Real::of(1L));
    ReceivedConstellation rc = enumerate_received(sm.rx);
    CHECK(rc.gamma == GammaVerdict::Holds);
    CHECK(!rc.dmin_unit_exact.has_value());  // values are genuinely irrational
}

TEST_CASE("numeric mode never certifies gamma") {
    ChannelInstance ch;
    ch.h = {{Gain::numeric(Real::of(1.0)), Gain::numeric(Real::of(std::sqrt(2.0)))},
            {Gain::numeric(Real::of(std::sqrt(3.0))), Gain::numeric(Real::of(1.01))}};
    ch.P = 100.0;
    ch.sigma2 = 1.0;
    XChannelModels xm = x_channel_models(ch, 0.1);
    ReceivedConstellation rc = enumerate_received(xm.rx[0]);
    CHECK(rc.gamma == GammaVerdict::NumericUncertain);
}

TEST_CASE("dmin matches the pairwise oracle") {
    RandomSource rng(99);
    int checked = 0;
    for (int trial = 0; trial < 8; ++trial) {
        double P = 100.0 * std::pow(10.0, trial % 4);
        XChannelModels xm = x_channel_models(x_example(P), 0.1);
        const ReceivedModel& model = xm.rx[size_t(trial) % 4];
        if (model.tuple_count() > 5000) continue;
        ReceivedConstellation rc = enumerate_received(model);
        if (!rc.has_dmin) continue;
        // O(N^2) oracle over distinct labels
        double best = HUGE_VAL;
        for (size_t i = 0; i < rc.entries.size(); ++i)
            for (size_t j = i + 1; j < rc.entries.size(); ++j) {
                if (rc.label_of(rc.entries[i]) == rc.label_of(rc.entries[j])) continue;
                best = std::min(best, std::fabs(rc.entries[j].value - rc.entries[i].value));
            }
        CHECK(rc.dmin.to_double() == doctest::Approx(best).epsilon(1e-9));
        ++checked;
    }
    CHECK(checked >= 2);
    (void)rng;
}

TEST_CASE("two-point constellation dmin") {
    ReceivedModel m;
    m.mode = GainMode::Exact;
    m.receiver = "rx";
    m.stream_id = "u";
    m.g0 = g_rat(5);
    m.wanted = {"u", PointSet::interval(0, 1)};
    m.amplitude = Real::of(1L);
    ReceivedConstellation rc = enumerate_received(m);  // values {0, 5}
    CHECK(min_distance(rc).to_double() == doctest::Approx(5.0));

    SymmetricMultilayerModel sm = sym_unit(5, 1, 6, 1, 1);
    // a = 1: single transmit point, I in {0}; only one tuple -> no dmin
    ReceivedConstellation rc1 = enumerate_received(sm.rx);
    CHECK(!rc1.has_dmin);
    CHECK_THROWS_AS(min_distance(rc1), std::domain_error);
}

TEST_CASE("hard decode: exact point, midpoint tie, oracle equivalence") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 2);
    ReceivedConstellation rc = enumerate_received(sm.rx);

    for (size_t i = 0; i < rc.entries.size(); i += 3)
        CHECK(hard_decode(rc, rc.entries[i].value).entry == i);

    // midpoint between the first two values decodes to the smaller
    double mid = 0.5 * (rc.entries[0].value + rc.entries[1].value);
    CHECK(hard_decode(rc, mid).entry == 0);

    RandomSource rng(7);
    double lo = rc.entries.front().value - 1, hi = rc.entries.back().value + 1;
    for (int t = 0; t < 10000; ++t) {
        double y = lo + (hi - lo) * rng.uniform01();
        DecodeResult d = hard_decode(rc, y);
        size_t best = 0;
        double bd = HUGE_VAL;
        for (size_t i = 0; i < rc.entries.size(); ++i) {
            double dist = std::fabs(rc.entries[i].value - y);
            if (dist < bd || (dist == bd && rc.entries[i].value < rc.entries[best].value)) {
                bd = dist;
                best = i;
            }
        }
        CHECK(d.entry == best);
    }
}

TEST_CASE("noiseless simulation is error free when gamma holds") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 2);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    RandomSource rng(31);
    SimulationResult r = simulate(sm.rx, rc, 0.0, 5000, rng);
    CHECK(r.errors == 0);
    CHECK(r.pe == 0.0);
    CHECK(r.rate_bound == doctest::Approx(std::log2(4.0) - 1.0));
}

TEST_CASE("simulation determinism across worker counts") {
    XChannelModels xm = x_channel_models(x_example(1e6), 0.1);
    ReceivedConstellation rc = enumerate_received(xm.rx[0]);
    RandomSource rng(123, 5);
    SimulationResult a = simulate(xm.rx[0], rc, 1.0, 20000, rng, 1);
    SimulationResult b = simulate(xm.rx[0], rc, 1.0, 20000, rng, 8);
    CHECK(a.errors == b.errors);
}

TEST_CASE("measured error stays under the union bound at high margin") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 2);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    double dmin = rc.dmin.to_double();
    double sigma = dmin / 20.0;
    RandomSource rng(17);
    SimulationResult r = simulate(sm.rx, rc, sigma, 100000, rng);
    double se = std::sqrt(std::max(r.pe * (1 - r.pe), 1e-12) / double(r.trials));
    CHECK(r.pe <= r.union_bound + 3 * se);
}

TEST_CASE("error rate is monotone in dmin/sigma") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 1);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    double dmin = rc.dmin.to_double();
    double last = -1;
    int step = 0;
    for (double ratio : {1.0, 2.0, 4.0, 8.0}) {
        RandomSource rng(900 + step++);
        SimulationResult r = simulate(sm.rx, rc, dmin / ratio, 40000, rng);
        if (last >= 0) CHECK(r.pe <= last + 0.02);  // Monte Carlo slack
        last = r.pe;
    }
}

TEST_CASE("dof slope on synthetic data") {
    SweepResult sweep;
    for (double P : {1e4, 1e6, 1e8, 1e10}) {
        SweepPoint pt;
        pt.P = P;
        SimulationResult s;
        s.pe = 1e-4;
        pt.streams.push_back(s);
        pt.sum_rate = 0.5 * std::log2(P);
        sweep.points.push_back(pt);
    }
    CHECK(dof_slope(sweep, 1e-2) == doctest::Approx(1.0).epsilon(1e-12));

    RandomSource rng(3);
    SweepResult noisy = sweep;
    for (auto& pt : noisy.points)
        pt.sum_rate = (2.0 / 3) * 0.5 * std::log2(pt.P) + 0.02 * (rng.uniform01() - 0.5);
    CHECK(dof_slope(noisy, 1e-2) == doctest::Approx(2.0 / 3).epsilon(0.03));

    SweepResult hopeless = sweep;
    for (auto& pt : hopeless.points) pt.streams[0].pe = 0.5;
    CHECK_THROWS_AS(dof_slope(hopeless, 1e-2), std::domain_error);
}

TEST_CASE("dmin bounds: rational equality branch") {
    SymmetricMultilayerModel sm = sym_unit(2, 3, 6, 2, 2);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    DminExtras extras;
    extras.rational_h = make_rational(2, 3);
    DminReport rep = verify_dmin_bounds(sm.rx, rc, extras);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].pass);
}

TEST_CASE("dmin bounds: irrational margin branch") {
    QuadFieldElement h = QuadFieldElement::sqrt_d1(F23);
    IrrationalSelection sel = select_irrational(h, 0.1, 20);
    for (int L = 1; L <= 2; ++L) {
        SymmetricMultilayerModel sm = symmetric_multilayer_model(
            Gain::exact(h), sel, L, 100.0, 1.0, Real::of(1L));
        EnumerateOptions opt;
        opt.tuple_cap = 100'000'000;
        ReceivedConstellation rc = enumerate_received(sm.rx, opt);
        DminExtras extras;
        extras.irr_sel = sel;
        DminReport rep = verify_dmin_bounds(sm.rx, rc, extras);
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].pass);
    }
}

TEST_CASE("dmin bounds: KG check requires kappa") {
    XChannelModels xm = x_channel_models(x_example(1e6), 0.1);
    ReceivedConstellation rc = enumerate_received(xm.rx[0]);
    DminExtras extras;
    extras.kg_requested = true;
    CHECK_THROWS_AS(verify_dmin_bounds(xm.rx[0], rc, extras), std::invalid_argument);
}

TEST_CASE("dmin bounds: KG lower bound on the x channel") {
    XChannelModels xm = x_channel_models(x_example(1e6), 0.1);
    const ReceivedModel& model = xm.rx[0];
    ReceivedConstellation rc = enumerate_received(model);
    std::vector<Real> alpha;
    for (const auto& agg : model.aggregates) alpha.push_back((agg.basis / model.g0).value());
    DminExtras extras;
    extras.kg_requested = true;
    extras.kappa.push_back(khintchine_kappa(alpha, 0.2, 256));
    DminReport rep = verify_dmin_bounds(model, rc, extras);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].pass);
    CHECK(rep.checks[0].measured >= rep.checks[0].bound);
}

TEST_CASE("noiseless decode of every tuple recovers its label when gamma holds") {
    SymmetricMultilayerModel sm = sym_unit(1, 4, 7, 2, 2);
    ReceivedConstellation rc = enumerate_received(sm.rx);
    REQUIRE(rc.gamma == GammaVerdict::Holds);
    for (const auto& e : rc.entries) {
        DecodeResult d = hard_decode(rc, e.value);
        CHECK(rc.entries[d.entry].code == e.code);
    }
}
