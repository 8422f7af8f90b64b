#include "ria/models.hpp"

#include <cmath>
#include <stdexcept>

#include "ria/linalg.hpp"

namespace ria {

namespace {

double abs_value(const Gain& g) { return std::fabs(g.value(96).to_double()); }

void check_epsilon(double epsilon) {
    if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("epsilon must be in (0, 1/2)");
}

// Exact decodability regularity check: {G0, G1..Gm} rationally
// independent.  Numeric mode cannot certify this and skips it.
void check_rank(ReceivedModel& model) {
    if (model.mode != GainMode::Exact) return;
    std::vector<QuadFieldElement> basis{model.g0.exact_value()};
    for (const auto& a : model.aggregates) basis.push_back(a.basis.exact_value());
    int rank = rational_rank(basis);
    if (rank != int(basis.size())) {
        model.degenerate = true;
        model.degeneracy_note = "receiver " + model.receiver + " basis rank " + std::to_string(rank) +
                                " < " + std::to_string(basis.size()) + " (rational dependence)";
    }
}

Real equality_amplitude(double P, double worst_magnitude) {
    mpfr_prec_t prec = default_precision();
    return Real::of(P, prec).sqrt() / Real::of(worst_magnitude, prec);
}

}  // namespace

double TransmitScheme::worst_case_magnitude() const {
    double s = 0;
    for (const auto& e : entries) s += abs_value(e.direction) * double(e.points.max_abs());
    return s;
}

int64_t ReceivedModel::tuple_count() const {
    int64_t n = wanted.points.size();
    for (const auto& a : aggregates) {
        if (n > INT64_MAX / a.points.size()) throw std::overflow_error("tuple count overflow");
        n *= a.points.size();
    }
    return n;
}

XChannelModels x_channel_models(const ChannelInstance& ch, double epsilon) {
    ch.validate(2, 2);
    check_epsilon(epsilon);
    const Gain& h11 = ch.h[0][0];
    const Gain& h12 = ch.h[0][1];
    const Gain& h21 = ch.h[1][0];
    const Gain& h22 = ch.h[1][1];

    XChannelModels out;
    out.q_scaling = scaling(ch.P, epsilon, 2);
    int64_t Q = out.q_scaling.Q;
    PointSet pts = PointSet::interval(-Q, Q);

    out.tx[0] = TransmitScheme{"tx1", {{"u1", h22, pts}, {"v1", h12, pts}}, Real()};
    out.tx[1] = TransmitScheme{"tx2", {{"u2", h21, pts}, {"v2", h11, pts}}, Real()};
    double worst = std::max(out.tx[0].worst_case_magnitude(), out.tx[1].worst_case_magnitude());
    Real G = equality_amplitude(ch.P, worst);
    out.tx[0].amplitude = G;
    out.tx[1].amplitude = G;

    Gain g_u1 = h11 * h22;  // coefficient of u1 at receiver 1
    Gain g_u2 = h12 * h21;  // coefficient of u2 at receiver 1 (and of v1 at receiver 2)
    Gain g_i1 = h11 * h12;  // aligned coefficient of v1 + v2 at receiver 1
    Gain g_i2 = h21 * h22;  // aligned coefficient of u1 + u2 at receiver 2

    PointSet agg1 = PointSet::interval(-Q, Q);
    PointSet agg2 = PointSet::interval(-2 * Q, 2 * Q);

    auto make = [&](const std::string& recv, const std::string& stream, const Gain& g0,
                    const ReceivedModel::StreamRef& other_single, const Gain& single_basis,
                    const ReceivedModel::StreamRef& pair_a, const ReceivedModel::StreamRef& pair_b,
                    const Gain& pair_basis) {
        ReceivedModel m;
        m.mode = ch.mode();
        m.receiver = recv;
        m.stream_id = stream;
        m.g0 = g0;
        m.wanted = {stream, pts};
        m.others = {other_single, pair_a, pair_b};
        m.aggregates = {
            AggregateSpec{single_basis, {{0, 1}}, agg1, Q},
            AggregateSpec{pair_basis, {{1, 1}, {2, 1}}, agg2, 2 * Q},
        };
        m.amplitude = G;
        m.P = ch.P;
        m.sigma2 = ch.sigma2;
        m.epsilon = epsilon;
        m.scaling_m = 2;
        check_rank(m);
        return m;
    };

    ReceivedModel::StreamRef u1{"u1", pts}, u2{"u2", pts}, v1{"v1", pts}, v2{"v2", pts};
    out.rx.push_back(make("rx1", "u1", g_u1, u2, g_u2, v1, v2, g_i1));
    out.rx.push_back(make("rx1", "u2", g_u2, u1, g_u1, v1, v2, g_i1));
    out.rx.push_back(make("rx2", "v1", g_u2, v2, g_u1, u1, u2, g_i2));
    out.rx.push_back(make("rx2", "v2", g_u1, v1, g_u2, u1, u2, g_i2));
    return out;
}

GicModels gic_single_stream_models(const ChannelInstance& ch, double epsilon) {
    size_t K = ch.users();
    if (K < 2) throw std::invalid_argument("gic: K >= 2 required");
    ch.validate(K, K);
    check_epsilon(epsilon);
    if (ch.mode() != GainMode::Exact)
        throw std::invalid_argument("gic_single_stream_models: EXACT gains required");

    GicModels out;
    // Per-receiver rational dimension of the cross gains.
    std::vector<RationalDecomposition> dec(K);
    std::vector<int> m_of(K);
    for (size_t i = 0; i < K; ++i) {
        std::vector<std::vector<Rational>> rows;
        for (size_t j = 0; j < K; ++j) {
            if (j == i) continue;
            const auto& c = ch.h[i][j].exact_value().coords();
            rows.push_back({c[0], c[1], c[2], c[3]});
        }
        dec[i] = rational_decompose(rows);
        m_of[i] = dec[i].rank;
    }

    // Each stream is decoded only at its own receiver; Q_i follows that
    // receiver's m.
    std::vector<int64_t> Q(K);
    std::vector<Real> amp(K);
    for (size_t i = 0; i < K; ++i) {
        PowerScaling s = scaling(ch.P, epsilon, m_of[i]);
        Q[i] = s.Q;
        amp[i] = equality_amplitude(ch.P, double(Q[i]));
        out.tx.push_back(TransmitScheme{
            "tx" + std::to_string(i + 1),
            {{"u" + std::to_string(i + 1),
              Gain::exact(QuadFieldElement::rational(ch.h[0][0].exact_value().field(), Rational(1))),
              PointSet::interval(-Q[i], Q[i])}},
            amp[i]});
    }

    const QuadField& f = ch.h[0][0].exact_value().field();
    for (size_t i = 0; i < K; ++i) {
        ReceivedModel m;
        m.mode = GainMode::Exact;
        m.receiver = "rx" + std::to_string(i + 1);
        m.stream_id = "u" + std::to_string(i + 1);
        m.g0 = ch.h[i][i];
        m.wanted = {m.stream_id, PointSet::interval(-Q[i], Q[i])};
        std::vector<size_t> other_tx;
        for (size_t j = 0; j < K; ++j) {
            if (j == i) continue;
            m.others.push_back({"u" + std::to_string(j + 1), PointSet::interval(-Q[j], Q[j])});
            other_tx.push_back(j);
        }
        // Clear coefficient denominators into the basis gains: with
        // D_l = lcm_j den(alpha_jl), G_l = e_l / D_l and beta_jl integer.
        for (int l = 0; l < dec[i].rank; ++l) {
            mpz_class D(1);
            for (size_t r = 0; r < other_tx.size(); ++r)
                mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), dec[i].coeffs[r][l].get_den().get_mpz_t());
            const auto& bc = dec[i].basis_coords[l];
            QuadFieldElement e(f, bc[0], bc[1], bc[2], bc[3]);
            AggregateSpec agg;
            agg.basis = Gain::exact(e.scale(make_rational(mpz_class(1), D)));
            int64_t bound = 0;
            for (size_t r = 0; r < other_tx.size(); ++r) {
                Rational beta = dec[i].coeffs[r][l] * Rational(D);
                mpz_class bz = beta.get_num();
                if (!bz.fits_slong_p()) throw std::overflow_error("aggregation coefficient too large");
                int64_t b = bz.get_si();
                if (b != 0) agg.terms.push_back({int(r), b});
                bound += std::llabs(b) * Q[other_tx[r]];
            }
            agg.bound = bound;
            agg.points = PointSet::interval(-bound, bound);
            m.aggregates.push_back(std::move(agg));
        }
        m.amplitude = amp[i];
        m.P = ch.P;
        m.sigma2 = ch.sigma2;
        m.epsilon = epsilon;
        m.scaling_m = m_of[i];
        check_rank(m);  // condition 4: direct gain independent of the basis
        out.rx.push_back(std::move(m));
    }
    return out;
}

GicModels gic3_asymmetric_models(const StandardizedThreeUser& s, double epsilon) {
    check_epsilon(epsilon);
    if (s.mode == GainMode::Exact && s.g0.is_rational())
        throw RationalG0("G0 = " + to_string(s.g0.exact_value().to_rational()) +
                         " is rational; use the single-stream scheme with m = 1");

    PowerScaling qs = scaling(s.P, epsilon, 2);
    int64_t Q = qs.Q;
    PointSet pts = PointSet::interval(-Q, Q);
    Gain one = s.mode == GainMode::Exact
                   ? Gain::exact(QuadFieldElement::rational(s.g0.exact_value().field(), Rational(1)))
                   : Gain::numeric(Real::of(1L));

    GicModels out;
    out.tx.push_back(TransmitScheme{"tx1", {{"u1", one, pts}, {"u1p", s.g0, pts}}, Real()});
    out.tx.push_back(TransmitScheme{"tx2", {{"u2", one, pts}}, Real()});
    out.tx.push_back(TransmitScheme{"tx3", {{"u3", one, pts}}, Real()});
    double worst = std::max({out.tx[0].worst_case_magnitude(), out.tx[1].worst_case_magnitude(),
                             out.tx[2].worst_case_magnitude()});
    Real A = equality_amplitude(s.P, worst);
    for (auto& t : out.tx) t.amplitude = A;

    PointSet agg1 = PointSet::interval(-Q, Q);
    PointSet agg2 = PointSet::interval(-2 * Q, 2 * Q);

    ReceivedModel::StreamRef u1{"u1", pts}, u1p{"u1p", pts}, u2{"u2", pts}, u3{"u3", pts};
    auto finish = [&](ReceivedModel& m) {
        m.mode = s.mode;
        m.amplitude = A;
        m.P = s.P;
        m.sigma2 = s.sigma2;
        m.epsilon = epsilon;
        m.scaling_m = 2;
        check_rank(m);
        out.rx.push_back(std::move(m));
    };

    {  // receiver 1 decodes u1: y1 = A(G1 u1 + G1 G0 u1' + (u2+u3)) + z1
        ReceivedModel m;
        m.receiver = "rx1";
        m.stream_id = "u1";
        m.g0 = s.g1;
        m.wanted = {"u1", pts};
        m.others = {u1p, u2, u3};
        m.aggregates = {AggregateSpec{s.g1 * s.g0, {{0, 1}}, agg1, Q},
                        AggregateSpec{one, {{1, 1}, {2, 1}}, agg2, 2 * Q}};
        finish(m);
    }
    {  // receiver 1 decodes u1'
        ReceivedModel m;
        m.receiver = "rx1";
        m.stream_id = "u1p";
        m.g0 = s.g1 * s.g0;
        m.wanted = {"u1p", pts};
        m.others = {u1, u2, u3};
        m.aggregates = {AggregateSpec{s.g1, {{0, 1}}, agg1, Q},
                        AggregateSpec{one, {{1, 1}, {2, 1}}, agg2, 2 * Q}};
        finish(m);
    }
    {  // receiver 2: y2 = A(G2 u2 + (u1+u3) + G0 u1') + z2
        ReceivedModel m;
        m.receiver = "rx2";
        m.stream_id = "u2";
        m.g0 = s.g2;
        m.wanted = {"u2", pts};
        m.others = {u1, u3, u1p};
        m.aggregates = {AggregateSpec{one, {{0, 1}, {1, 1}}, agg2, 2 * Q},
                        AggregateSpec{s.g0, {{2, 1}}, agg1, Q}};
        finish(m);
    }
    {  // receiver 3: y3 = A(G3 u3 + u1 + G0 (u1'+u2)) + z3
        ReceivedModel m;
        m.receiver = "rx3";
        m.stream_id = "u3";
        m.g0 = s.g3;
        m.wanted = {"u3", pts};
        m.others = {u1p, u2, u1};
        m.aggregates = {AggregateSpec{s.g0, {{0, 1}, {1, 1}}, agg2, 2 * Q},
                        AggregateSpec{one, {{2, 1}}, agg1, Q}};
        finish(m);
    }
    return out;
}

SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, int64_t W, int64_t a, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override) {
    if (a >= W) throw std::invalid_argument("symmetric multilayer: a < W required");
    MultiLayerConstellation c(W, a, L);
    SymmetricMultilayerModel out;
    out.constellation = c;
    Real A = amplitude_override ? *amplitude_override : multilayer_amplitude(W, a, L, P);

    PointSet user_pts = c.points();
    Gain one = h.is_exact()
                   ? Gain::exact(QuadFieldElement::rational(h.exact_value().field(), Rational(1)))
                   : Gain::numeric(Real::of(1L));
    out.tx = TransmitScheme{"tx1", {{"b", one, user_pts}}, A};

    ReceivedModel m;
    m.mode = h.mode();
    m.receiver = "rx1";
    m.stream_id = "b";
    m.g0 = one;
    m.wanted = {"b", user_pts};
    m.others = {{"b2", user_pts}, {"b3", user_pts}};
    // Per-level interference digits I_l = b'_l + b''_l live in
    // {0..2(a-1)}, all below W, so the aggregate u(b') + u(b'') is again a
    // base-W digit set and (b, I) is recoverable from the pair.
    AggregateSpec agg;
    agg.basis = h;
    agg.terms = {{0, 1}, {1, 1}};
    agg.points = PointSet::digits(W, 2 * a - 1, L);
    agg.bound = agg.points.max_point();
    m.aggregates = {std::move(agg)};
    m.amplitude = A;
    m.P = P;
    m.sigma2 = sigma2;
    m.epsilon = 0;
    m.scaling_m = 1;
    m.full_label_injectivity = true;
    out.rx = std::move(m);
    return out;
}

SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, const RationalSelection& sel, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override) {
    if (sel.degenerate) throw std::invalid_argument("symmetric multilayer: degenerate table selection (a <= 1)");
    if (!sel.a.fits_slong_p() || !sel.W.fits_slong_p())
        throw std::overflow_error("symmetric multilayer: selection too large");
    return symmetric_multilayer_model(h, sel.W.get_si(), sel.a.get_si(), L, P, sigma2, amplitude_override);
}

SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, const IrrationalSelection& sel, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override) {
    if (!sel.a.fits_slong_p() || !sel.W.fits_slong_p())
        throw std::overflow_error("symmetric multilayer: selection too large");
    return symmetric_multilayer_model(h, sel.W.get_si(), sel.a.get_si(), L, P, sigma2, amplitude_override);
}

}  // namespace ria
