#include "ria/simulate.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace ria {

namespace {
constexpr uint64_t kBlock = 4096;

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }
}

SimulationResult simulate(const ReceivedModel& model, const ReceivedConstellation& rc, double sigma,
                          uint64_t trials, const RandomSource& rng, int workers) {
    if (trials < 1) throw std::invalid_argument("simulate: trials >= 1 required");
    if (sigma < 0) throw std::invalid_argument("simulate: sigma >= 0 required");
    if (rc.model.stream_id != model.stream_id || rc.model.receiver != model.receiver ||
        rc.model.tuple_count() != model.tuple_count())
        throw std::invalid_argument("simulate: constellation does not belong to this model");

    const ValueComputer& vc = *rc.values;

    // Point tables for the wanted stream and each interfering stream.
    std::vector<int64_t> wanted_pts(model.wanted.points.size());
    for (int64_t i = 0; i < model.wanted.points.size(); ++i) wanted_pts[i] = model.wanted.points.point(i);
    std::vector<std::vector<int64_t>> other_pts(model.others.size());
    for (size_t s = 0; s < model.others.size(); ++s) {
        const PointSet& ps = model.others[s].points;
        other_pts[s].resize(ps.size());
        for (int64_t i = 0; i < ps.size(); ++i) other_pts[s][i] = ps.point(i);
    }

    uint64_t nblocks = (trials + kBlock - 1) / kBlock;
    auto run_blocks = [&](uint64_t b0, uint64_t b1) {
        uint64_t errors = 0;
        std::vector<int64_t> opts(model.others.size());
        std::vector<int64_t> aggv(model.aggregates.size());
        for (uint64_t b = b0; b < b1; ++b) {
            RandomSource blk = rng.derive(b);
            uint64_t count = std::min(kBlock, trials - b * kBlock);
            for (uint64_t t = 0; t < count; ++t) {
                int64_t idx0 = blk.uniform_int(0, int64_t(wanted_pts.size()) - 1);
                for (size_t s = 0; s < opts.size(); ++s)
                    opts[s] = other_pts[s][size_t(blk.uniform_int(0, int64_t(other_pts[s].size()) - 1))];
                for (size_t k = 0; k < aggv.size(); ++k) {
                    int64_t acc = 0;
                    for (const auto& term : model.aggregates[k].terms)
                        acc += term.coeff * opts[size_t(term.stream)];
                    aggv[k] = acc;
                }
                double y = vc.value_double(wanted_pts[size_t(idx0)], aggv.data()) + blk.gaussian(sigma);
                DecodeResult d = hard_decode(rc, y);
                if (d.symbol != int32_t(idx0)) ++errors;
            }
        }
        return errors;
    };

    uint64_t errors = 0;
    if (workers <= 1 || nblocks == 1) {
        errors = run_blocks(0, nblocks);
    } else {
        size_t nw = std::min<uint64_t>(uint64_t(workers), nblocks);
        std::vector<std::future<uint64_t>> futs;
        uint64_t per = (nblocks + nw - 1) / nw;
        for (size_t w = 0; w < nw; ++w) {
            uint64_t b0 = w * per, b1 = std::min(nblocks, b0 + per);
            if (b0 >= b1) break;
            futs.push_back(std::async(std::launch::async, run_blocks, b0, b1));
        }
        for (auto& f : futs) errors += f.get();
    }

    SimulationResult r;
    r.stream_id = model.stream_id;
    r.trials = trials;
    r.errors = errors;
    r.pe = double(errors) / double(trials);
    r.dmin = rc.has_dmin ? rc.dmin.to_double() : 0.0;
    if (sigma > 0) {
        r.union_bound = std::exp(-(r.dmin * r.dmin) / (8 * sigma * sigma));
        r.q_bound = q_function(r.dmin / (2 * sigma));
    } else {
        r.union_bound = r.dmin > 0 ? 0.0 : 1.0;
        r.q_bound = r.union_bound;
    }
    r.log2_card = std::log2(double(model.wanted.points.size()));
    r.rate_bound = std::max(0.0, (1.0 - r.pe) * r.log2_card - 1.0);
    r.P = model.P;
    r.sigma2 = sigma * sigma;
    r.seed = rng.seed();
    return r;
}

double dof_slope(const SweepResult& sweep, double pe_threshold) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : sweep.points) {
        double worst = 0;
        for (const auto& s : p.streams) worst = std::max(worst, s.pe);
        if (worst < pe_threshold) pts.push_back({0.5 * std::log2(p.P), p.sum_rate});
    }
    if (pts.size() < 3)
        throw std::domain_error("dof_slope: fewer than 3 points with pe below " +
                                std::to_string(pe_threshold));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DminReport verify_dmin_bounds(const ReceivedModel& model, const ReceivedConstellation& rc,
                              const DminExtras& extras) {
    DminReport rep;
    double amp = model.amplitude.to_double();
    double measured = rc.has_dmin ? rc.dmin.to_double() : 0.0;

    if (extras.kg_requested) {
        if (extras.kappa.empty())
            throw std::invalid_argument("verify_dmin_bounds: KG check requested without a kappa estimate");
        int64_t qmax_bound = 0;
        for (const auto& a : model.aggregates) qmax_bound = std::max(qmax_bound, a.bound);
        for (const auto& kap : extras.kappa) {
            double g0 = std::fabs(model.g0.value(96).to_double()) * amp;
            double bound = kap.kappa_hat.to_double() * g0 /
                           std::pow(double(qmax_bound), double(model.m()) + kap.epsilon);
            DminCheck c;
            c.name = "kg-lower-bound(Qmax=" + std::to_string(kap.Qmax) + ")";
            c.bound = bound;
            c.measured = measured;
            c.pass = measured >= bound;
            rep.checks.push_back(c);
        }
    }

    if (extras.rational_h) {
        DminCheck c;
        c.name = "rational-equality";
        Rational expect = make_rational(mpz_class(1), mpz_class(extras.rational_h->get_den()));
        c.bound = amp * expect.get_d();
        c.measured = measured;
        if (rc.dmin_unit_exact) {
            c.pass = (*rc.dmin_unit_exact == expect);
            c.note = "exact compare " + to_string(*rc.dmin_unit_exact) + " vs " + to_string(expect);
        } else {
            c.pass = false;
            c.note = "constellation values are not exact rationals";
        }
        rep.checks.push_back(c);
    }

    if (extras.irr_sel) {
        DminCheck c;
        c.name = "irrational-margin";
        Real margin = extras.irr_sel->margin;
        c.bound = amp * margin.to_double();
        c.measured = measured;
        // Certified at working precision: the slack must clear 2^-80.
        Real slack = rc.dmin_unit - margin;
        c.pass = rc.has_dmin && slack > Real::of(0x1p-80, 64);
        c.note = "slack " + slack.str(8);
        rep.checks.push_back(c);
    }

    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace ria
