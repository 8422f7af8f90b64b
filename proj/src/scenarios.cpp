#include "ria/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ria/csv.hpp"
#include "ria/errors.hpp"
#include "ria/farey.hpp"
#include "ria/gamma_scan.hpp"

namespace ria {

const std::vector<std::string> kSweepColumns = {
    "scenario", "mode",   "h_spec",      "P",      "sigma2", "epsilon", "stream_id", "Q_or_aWL",
    "dmin",     "union_bound", "trials", "errors", "pe",     "rate_bound", "r_of_P"};

const std::vector<std::string> kGainScanColumns = {"h_num", "h_den_or_tag", "case",           "a",
                                                   "W",     "theory_dof",   "measured_slope", "degenerate"};

namespace {

Gain parse_h_gain(const ExperimentConfig& cfg) {
    if (!cfg.extra.contains("h")) throw ConfigError("scenario needs an 'h' gain");
    GainSpec spec = GainSpec::parse(cfg.extra.at("h").get<std::string>());
    if (spec.is_random()) throw ConfigError("'h' must be exact (rational or coords)");
    RandomSource rng(cfg.seed, 0);
    QuadField f = cfg.field;
    if (spec.kind == GainSpec::Kind::Coords) {
        // Named irrationals carry their own field.
        if (auto named = find_irrational(cfg.extra.at("h").get<std::string>())) f = named->field;
    }
    return spec.instantiate(f, rng, default_precision());
}

std::string awl_meta(int64_t a, int64_t W, int L) {
    std::ostringstream os;
    os << "a=" << a << ";W=" << W << ";L=" << L;
    return os.str();
}

}  // namespace

std::vector<double> multilayer_grid(int64_t W, double epsilon, int Lmax, double cap) {
    std::vector<double> out;
    mpfr_prec_t prec = default_precision();
    for (int L = 1; L <= Lmax; ++L) {
        Real e = Real::of(2.0 * L, prec) / Real::of(1.0 - 2.0 * epsilon, prec);
        double P = Real::of(long(W), prec).pow(e).to_double();
        if (P > cap) break;
        out.push_back(P);
    }
    return out;
}

BuiltPoint build_models(const ExperimentConfig& cfg, double P) {
    BuiltPoint out;
    if (cfg.scenario == "x-channel") {
        ChannelInstance ch = cfg.channel(2, 2, P);
        XChannelModels xm = x_channel_models(ch, cfg.epsilon);
        for (auto& m : xm.rx) {
            if (m.degenerate) out.warnings.push_back(m.degeneracy_note);
            out.meta.push_back("Q=" + std::to_string(xm.q_scaling.Q));
            out.models.push_back(std::move(m));
        }
    } else if (cfg.scenario == "gic-k") {
        size_t K = cfg.gains.size();
        ChannelInstance ch = cfg.channel(K, K, P);
        GicModels gm = gic_single_stream_models(ch, cfg.epsilon);
        for (auto& m : gm.rx) {
            if (m.degenerate) out.warnings.push_back(m.degeneracy_note);
            out.meta.push_back("Q=" + std::to_string(m.wanted.points.max_point()) +
                               ";m=" + std::to_string(m.m()));
            out.models.push_back(std::move(m));
        }
    } else if (cfg.scenario == "gic3-asymmetric") {
        ChannelInstance ch = cfg.channel(3, 3, P);
        StandardizedThreeUser s = standardize_three_user(ch);
        GicModels gm;
        try {
            gm = gic3_asymmetric_models(s, cfg.epsilon);
        } catch (const RationalG0& e) {
            out.warnings.push_back(std::string(e.what()) + "; falling back to single-stream m=1");
            gm = gic_single_stream_models(standard_channel(s), cfg.epsilon);
        }
        for (auto& m : gm.rx) {
            if (m.degenerate) out.warnings.push_back(m.degeneracy_note);
            out.meta.push_back("Q=" + std::to_string(m.wanted.points.max_point()));
            out.models.push_back(std::move(m));
        }
    } else if (cfg.scenario == "symmetric-rational") {
        Gain h = parse_h_gain(cfg);
        if (!h.is_rational()) throw ConfigError("symmetric-rational needs a rational 'h'");
        Rational hq = h.exact_value().to_rational();
        RationalSelection sel = select_rational_gain(hq);
        if (sel.degenerate) throw ConfigError("degenerate table selection for h = " + to_string(hq));
        int L = multilayer_levels(P, cfg.epsilon, sel.W.get_si());
        if (L < 1) throw ConfigError("P too small for one layer at W = " + sel.W.get_str());
        SymmetricMultilayerModel sm = symmetric_multilayer_model(h, sel, L, P, cfg.sigma2);
        out.meta.push_back(awl_meta(sel.a.get_si(), sel.W.get_si(), L));
        out.models.push_back(std::move(sm.rx));
        out.sum_rate_factor = 3.0;
    } else if (cfg.scenario == "symmetric-irrational") {
        Gain h = parse_h_gain(cfg);
        if (h.is_rational()) throw ConfigError("symmetric-irrational needs an irrational 'h'");
        long m_min = 2;
        if (cfg.extra.contains("m_min")) m_min = cfg.extra.at("m_min").get<long>();
        IrrationalSelection sel = select_irrational(h.exact_value(), cfg.epsilon, m_min);
        int L = multilayer_levels(P, cfg.epsilon, sel.W.get_si());
        if (L < 1) throw ConfigError("P too small for one layer at W = " + sel.W.get_str());
        SymmetricMultilayerModel sm = symmetric_multilayer_model(h, sel, L, P, cfg.sigma2);
        out.meta.push_back(awl_meta(sel.a.get_si(), sel.W.get_si(), L));
        out.models.push_back(std::move(sm.rx));
        out.sum_rate_factor = 3.0;
    } else {
        throw ConfigError("scenario '" + cfg.scenario + "' has no sweep models");
    }
    return out;
}

SweepResult run_sweep(const ExperimentConfig& cfg, RunManifest* mf, std::string* csv_out) {
    if (!cfg.sigma2_given) throw ConfigError("missing 'sigma2'");
    std::vector<double> Ps = cfg.P;
    if (Ps.empty()) throw ConfigError("missing 'P' list");

    CsvWriter csv(kSweepColumns);
    SweepResult sweep;
    double sigma = std::sqrt(cfg.sigma2);
    std::string mode_str;

    for (size_t pi = 0; pi < Ps.size(); ++pi) {
        BuiltPoint built = build_models(cfg, Ps[pi]);
        if (mf)
            for (const auto& w : built.warnings) mf->warnings.push_back(w);
        SweepPoint point;
        point.P = Ps[pi];
        EnumerateOptions opt;
        opt.tuple_cap = cfg.tuple_cap;
        for (size_t si = 0; si < built.models.size(); ++si) {
            const ReceivedModel& model = built.models[si];
            mode_str = model.mode == GainMode::Exact ? "exact" : "numeric";
            ReceivedConstellation rc = enumerate_received(model, opt);
            RandomSource rng = RandomSource(cfg.seed).derive(pi * 256 + si);
            SimulationResult sim = simulate(model, rc, sigma, cfg.trials, rng, cfg.workers);
            point.streams.push_back(sim);
            point.sum_rate += built.sum_rate_factor * sim.rate_bound;
        }
        point.r_of_P = point.sum_rate / (0.5 * std::log2(point.P));
        for (size_t si = 0; si < point.streams.size(); ++si) {
            const SimulationResult& s = point.streams[si];
            csv.row({cfg.scenario, mode_str, cfg.h_spec(), CsvWriter::num(point.P),
                     CsvWriter::num(cfg.sigma2), CsvWriter::num(cfg.epsilon), s.stream_id,
                     built.meta[si], CsvWriter::num(s.dmin), CsvWriter::num(s.union_bound),
                     CsvWriter::num(s.trials), CsvWriter::num(s.errors), CsvWriter::num(s.pe),
                     CsvWriter::num(s.rate_bound), CsvWriter::num(point.r_of_P)});
        }
        sweep.points.push_back(std::move(point));
    }
    if (csv_out) *csv_out = csv.text();
    return sweep;
}

std::string gamma_check_csv(const ExperimentConfig& cfg, RunManifest& mf) {
    int max_order = 12;
    int levels = 3;
    if (cfg.extra.contains("max_order")) max_order = cfg.extra.at("max_order").get<int>();
    if (cfg.extra.contains("levels")) levels = cfg.extra.at("levels").get<int>();
    if (max_order < 2 || levels < 1) throw ConfigError("gamma-check: max_order >= 2 and levels >= 1");

    CsvWriter csv({"n", "m", "case", "a", "W", "L", "verdict"});
    for (int64_t m = 1; m <= max_order; ++m) {
        for (int64_t n = 1; n <= max_order; ++n) {
            if (std::max(n, m) < 2) continue;
            if (std::gcd(n, m) != 1) continue;
            RationalSelection sel = select_rational_gain(make_rational(n, m));
            if (sel.degenerate) {
                csv.row({CsvWriter::num(n), CsvWriter::num(m), case_name(sel.case_tag),
                         sel.a.get_str(), sel.W.get_str(), "0", "degenerate"});
                continue;
            }
            for (int L = 1; L <= levels; ++L) {
                RationalGammaScan scan =
                    gamma_rational_scan(n, m, sel.a.get_si(), sel.W.get_si(), L, false);
                csv.row({CsvWriter::num(n), CsvWriter::num(m), case_name(sel.case_tag),
                         sel.a.get_str(), sel.W.get_str(), CsvWriter::num(int64_t(L)),
                         scan.holds ? "holds" : "violated"});
                if (!scan.holds)
                    mf.warnings.push_back("gamma violated at n=" + std::to_string(n) +
                                          " m=" + std::to_string(m) + " L=" + std::to_string(L));
            }
        }
    }
    return csv.text();
}

std::string gain_scan_csv(const ExperimentConfig& cfg, RunManifest& mf) {
    int64_t order = 8;
    if (cfg.extra.contains("farey_order")) order = cfg.extra.at("farey_order").get<int64_t>();
    std::vector<std::string> tags;
    if (cfg.extra.contains("irrationals"))
        tags = cfg.extra.at("irrationals").get<std::vector<std::string>>();
    else
        for (const auto& n : named_irrationals()) tags.push_back(n.tag);

    struct Record {
        double value;
        std::vector<std::string> cells;
    };
    std::vector<Record> records;

    for (auto [n, d] : farey_interior(order)) {
        RationalSelection sel = select_rational_gain(make_rational(n, d));
        double theory = dof_rational_formula(sel.h);
        records.push_back({double(n) / double(d),
                           {CsvWriter::num(n), CsvWriter::num(d), case_name(sel.case_tag),
                            sel.a.get_str(), sel.W.get_str(), CsvWriter::num(theory), "",
                            sel.degenerate ? "1" : "0"}});
    }
    for (const auto& tag : tags) {
        auto named = find_irrational(tag);
        if (!named) throw ConfigError("unknown irrational tag '" + tag + "'");
        QuadFieldElement h(named->field, named->coords[0], named->coords[1], named->coords[2],
                           named->coords[3]);
        if (h.sign() <= 0) throw ConfigError("gain scan needs positive gains: " + tag);
        records.push_back({h.to_real(96).to_double(),
                           {"", tag, "irr", "0", "0", CsvWriter::num(1.5), "", "0"}});
    }
    std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.cells[1] < b.cells[1];
    });

    (void)mf;
    CsvWriter csv(kGainScanColumns);
    for (const auto& r : records) csv.row(r.cells);
    return csv.text();
}

std::string khintchine_csv(const ExperimentConfig& cfg, RunManifest& mf) {
    int m = 2;
    if (cfg.extra.contains("m")) m = cfg.extra.at("m").get<int>();
    if (m < 1 || m > 4) throw ConfigError("khintchine: 1 <= m <= 4");
    std::vector<int64_t> qmax = {64, 128, 256, 512};
    if (cfg.extra.contains("Qmax")) qmax = cfg.extra.at("Qmax").get<std::vector<int64_t>>();
    int samples = 50;
    if (cfg.extra.contains("samples")) samples = cfg.extra.at("samples").get<int>();
    double kg_eps = 0.2;
    if (cfg.extra.contains("kg_epsilon")) kg_eps = cfg.extra.at("kg_epsilon").get<double>();

    std::vector<std::string> cols = {"sample"};
    for (int i = 0; i < m; ++i) cols.push_back("alpha" + std::to_string(i + 1));
    cols.insert(cols.end(), {"epsilon", "Qmax", "kappa_hat", "p"});
    for (int i = 0; i < m; ++i) cols.push_back("q" + std::to_string(i + 1));
    CsvWriter csv(cols);

    int zero_count = 0;
    for (int s = 0; s < samples; ++s) {
        RandomSource rng = RandomSource(cfg.seed).derive(1000 + uint64_t(s));
        std::vector<Real> alpha;
        for (int i = 0; i < m; ++i) alpha.push_back(Real::of(rng.uniform01()));
        auto profile = khintchine_kappa_profile(alpha, kg_eps, qmax);
        for (const auto& est : profile) {
            std::vector<std::string> row = {CsvWriter::num(int64_t(s))};
            for (const auto& a : alpha) row.push_back(CsvWriter::num(a.to_double()));
            row.push_back(CsvWriter::num(kg_eps));
            row.push_back(CsvWriter::num(est.Qmax));
            row.push_back(CsvWriter::num(est.kappa_hat.to_double()));
            row.push_back(est.p.get_str());
            for (int64_t qi : est.q) row.push_back(CsvWriter::num(qi));
            csv.row(row);
        }
        if (profile.back().kappa_hat.is_zero()) ++zero_count;
    }
    if (zero_count > 0)
        mf.warnings.push_back(std::to_string(zero_count) + " samples hit kappa_hat = 0");
    return csv.text();
}

std::string standardize_csv(const ExperimentConfig& cfg, RunManifest& mf) {
    CsvWriter csv({"index", "g0", "g1", "g2", "g3", "cross_unit_ok", "g1_forms_agree"});
    auto emit = [&](int idx, const ChannelInstance& ch) {
        StandardizedThreeUser s = standardize_three_user(ch);
        std::string ok = "-", agree = "-";
        if (ch.mode() == GainMode::Exact) {
            StandardFormCheck chk = verify_standard_form(ch, s);
            ok = (chk.cross_unit_ok && chk.diag_ok) ? "1" : "0";
            agree = chk.g1_forms_agree ? "1" : "0";
            if (!chk.all()) mf.warnings.push_back("standard form check failed at index " + std::to_string(idx));
        }
        auto fmt = [](const Gain& g) {
            if (g.is_exact() && g.exact_value().is_rational()) return to_string(g.exact_value().to_rational());
            return g.value(96).str(17);
        };
        csv.row({CsvWriter::num(int64_t(idx)), fmt(s.g0), fmt(s.g1), fmt(s.g2), fmt(s.g3), ok, agree});
    };

    if (!cfg.gains.empty()) {
        emit(0, cfg.channel(3, 3, cfg.P.empty() ? 1.0 : cfg.P[0]));
        return csv.text();
    }
    int count = 100;
    long den_max = 20;
    if (cfg.extra.contains("random_matrices")) count = cfg.extra.at("random_matrices").get<int>();
    if (cfg.extra.contains("den_max")) den_max = cfg.extra.at("den_max").get<long>();
    for (int i = 0; i < count; ++i) {
        RandomSource rng = RandomSource(cfg.seed).derive(2000 + uint64_t(i));
        ChannelInstance ch;
        ch.P = 1.0;
        ch.sigma2 = 1.0;
        for (int r = 0; r < 3; ++r) {
            std::vector<Gain> row;
            for (int c = 0; c < 3; ++c) {
                long num = rng.uniform_int(1, den_max);
                long den = rng.uniform_int(1, den_max);
                long sign = rng.uniform_int(0, 1) ? 1 : -1;
                row.push_back(Gain::exact(
                    QuadFieldElement::rational(cfg.field, make_rational(sign * num, den))));
            }
            ch.h.push_back(std::move(row));
        }
        emit(i, ch);
    }
    return csv.text();
}

std::string dmin_report_csv(const ExperimentConfig& cfg, RunManifest& mf) {
    if (cfg.P.empty()) throw ConfigError("dmin report needs a 'P' list");
    double kg_eps = 0.2;
    if (cfg.extra.contains("kg_epsilon")) kg_eps = cfg.extra.at("kg_epsilon").get<double>();
    CsvWriter csv({"P", "stream_id", "check", "bound", "measured", "pass"});
    for (size_t pi = 0; pi < cfg.P.size(); ++pi) {
        BuiltPoint built = build_models(cfg, cfg.P[pi]);
        for (const auto& w : built.warnings) mf.warnings.push_back(w);
        EnumerateOptions opt;
        opt.tuple_cap = cfg.tuple_cap;
        for (const auto& model : built.models) {
            ReceivedConstellation rc = enumerate_received(model, opt);
            DminExtras extras;
            if (cfg.scenario == "symmetric-rational") {
                Gain h = parse_h_gain(cfg);
                extras.rational_h = h.exact_value().to_rational();
            } else if (cfg.scenario == "symmetric-irrational") {
                Gain h = parse_h_gain(cfg);
                long m_min = cfg.extra.contains("m_min") ? cfg.extra.at("m_min").get<long>() : 2;
                extras.irr_sel = select_irrational(h.exact_value(), cfg.epsilon, m_min);
            } else {
                // Khintchine-Groshev lower bound with alpha_i = G_i / G0.
                extras.kg_requested = true;
                std::vector<Real> alpha;
                for (const auto& agg : model.aggregates) {
                    Gain ratio = agg.basis / model.g0;
                    alpha.push_back(ratio.value());
                }
                int64_t maxq = 0;
                for (const auto& agg : model.aggregates) maxq = std::max(maxq, agg.bound);
                extras.kappa.push_back(khintchine_kappa(alpha, kg_eps, 2 * maxq));
            }
            DminReport rep = verify_dmin_bounds(model, rc, extras);
            for (const auto& c : rep.checks)
                csv.row({CsvWriter::num(cfg.P[pi]), model.stream_id, c.name, CsvWriter::num(c.bound),
                         CsvWriter::num(c.measured), c.pass ? "1" : "0"});
        }
    }
    return csv.text();
}

RunManifest run_scenario(const ExperimentConfig& cfg) {
    RunManifest mf;
    mf.config_digest = cfg.digest();
    mf.seed = cfg.seed;
    mf.tool_version = kToolVersion;
    mf.started = timestamp_utc();

    if (cfg.scenario == "gamma-check") {
        write_output(mf, cfg.out_dir, "gamma_check.csv", gamma_check_csv(cfg, mf));
    } else if (cfg.scenario == "gain-scan") {
        write_output(mf, cfg.out_dir, "gain_scan.csv", gain_scan_csv(cfg, mf));
    } else if (cfg.scenario == "khintchine") {
        write_output(mf, cfg.out_dir, "khintchine.csv", khintchine_csv(cfg, mf));
    } else if (cfg.scenario == "gic3-standardize") {
        write_output(mf, cfg.out_dir, "standardize.csv", standardize_csv(cfg, mf));
    } else {
        std::string csv;
        run_sweep(cfg, &mf, &csv);
        write_output(mf, cfg.out_dir, "sweep.csv", csv);
    }
    mf.finished = timestamp_utc();
    write_output(mf, cfg.out_dir, "manifest.json", mf.to_json());
    return mf;
}

}  // namespace ria
