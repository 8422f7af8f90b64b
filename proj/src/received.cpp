#include "ria/received.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ria/errors.hpp"

namespace ria {

const char* verdict_name(GammaVerdict v) {
    switch (v) {
        case GammaVerdict::Holds: return "holds";
        case GammaVerdict::Violated: return "violated";
        case GammaVerdict::NumericUncertain: return "numeric-uncertain";
    }
    return "?";
}

ValueComputer::ValueComputer(const ReceivedModel& model, mpfr_prec_t prec)
    : prec_(prec ? prec : default_precision()) {
    nbasis_ = model.aggregates.size() + 1;
    exact_ = model.mode == GainMode::Exact;
    amp_r_ = model.amplitude.round_to(prec_);
    amp_d_ = model.amplitude.to_double();

    std::vector<Gain> basis;
    basis.push_back(model.g0);
    for (const auto& a : model.aggregates) basis.push_back(a.basis);

    std::vector<int64_t> max_pt;
    max_pt.push_back(model.wanted.points.max_abs());
    for (const auto& a : model.aggregates) max_pt.push_back(a.points.max_abs());

    if (exact_) {
        const QuadField& f = basis[0].exact_value().field();
        field_ = f;
        den_ = 1;
        for (const auto& g : basis)
            for (int j = 0; j < 4; ++j)
                mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), g.exact_value().coord(j).get_den().get_mpz_t());
        all_rational_ = true;
        ibasis_.resize(nbasis_);
        // Overflow guard: every tuple coordinate must stay within int64.
        mpz_class bound(0);
        for (size_t k = 0; k < nbasis_; ++k) {
            for (int j = 0; j < 4; ++j) {
                Rational scaled = basis[k].exact_value().coord(j) * Rational(den_);
                mpz_class num = scaled.get_num();
                if (!num.fits_slong_p()) throw std::overflow_error("basis coordinates exceed int64");
                ibasis_[k][j] = num.get_si();
                if (j > 0 && ibasis_[k][j] != 0) all_rational_ = false;
                bound += abs(num) * max_pt[k];
            }
        }
        if (bound > mpz_class("4611686018427387904"))  // 2^62
            throw std::overflow_error("tuple coordinates would exceed int64");
        sd_ = {1.0, std::sqrt(double(f.d1)), std::sqrt(double(f.d2)), std::sqrt(double(f.d1) * double(f.d2))};
        sr_[0] = Real::of(1L, prec_);
        sr_[1] = Real::of(mpz_class(f.d1), prec_).sqrt();
        sr_[2] = Real::of(mpz_class(f.d2), prec_).sqrt();
        mpz_class d12 = mpz_class(f.d1) * f.d2;
        sr_[3] = Real::of(d12, prec_).sqrt();
        inv_den_d_ = 1.0 / den_.get_d();
        // |value| <= amp/D * sum_j bound_j s_j; generous 2^-48 rounding budget.
        double mag = 0;
        for (size_t k = 0; k < nbasis_; ++k)
            for (int j = 0; j < 4; ++j) mag += std::fabs(double(ibasis_[k][j])) * double(max_pt[k]) * sd_[j];
        err_ = std::fabs(amp_d_) * inv_den_d_ * mag * 0x1p-48;
    } else {
        for (const auto& g : basis) {
            basis_r_.push_back(g.value(prec_));
            basis_d_.push_back(basis_r_.back().to_double());
        }
        double mag = 0;
        for (size_t k = 0; k < nbasis_; ++k) mag += std::fabs(basis_d_[k]) * double(max_pt[k]);
        err_ = std::fabs(amp_d_) * mag * 0x1p-48;
    }
}

double ValueComputer::value_double(int64_t pt0, const int64_t* agg) const {
    if (exact_) {
        int64_t k0 = ibasis_[0][0] * pt0, k1 = ibasis_[0][1] * pt0, k2 = ibasis_[0][2] * pt0,
                k3 = ibasis_[0][3] * pt0;
        for (size_t i = 1; i < nbasis_; ++i) {
            int64_t p = agg[i - 1];
            k0 += ibasis_[i][0] * p;
            k1 += ibasis_[i][1] * p;
            k2 += ibasis_[i][2] * p;
            k3 += ibasis_[i][3] * p;
        }
        return (double(k0) + double(k1) * sd_[1] + double(k2) * sd_[2] + double(k3) * sd_[3]) *
               (inv_den_d_ * amp_d_);
    }
    double v = basis_d_[0] * double(pt0);
    for (size_t i = 1; i < nbasis_; ++i) v += basis_d_[i] * double(agg[i - 1]);
    return v * amp_d_;
}

std::array<int64_t, 4> ValueComputer::coords(int64_t pt0, const int64_t* agg) const {
    std::array<int64_t, 4> k{};
    for (int j = 0; j < 4; ++j) k[j] = ibasis_[0][j] * pt0;
    for (size_t i = 1; i < nbasis_; ++i)
        for (int j = 0; j < 4; ++j) k[j] += ibasis_[i][j] * agg[i - 1];
    return k;
}

Real ValueComputer::value_real(int64_t pt0, const int64_t* agg) const {
    if (exact_) {
        auto k = coords(pt0, agg);
        Real acc = Real::of(long(k[0]), prec_);
        for (int j = 1; j < 4; ++j)
            if (k[j] != 0) acc += sr_[j].mul_si(long(k[j]));
        return acc * amp_r_ / Real::of(den_, prec_);
    }
    Real acc = basis_r_[0].mul_si(long(pt0));
    for (size_t i = 1; i < nbasis_; ++i) acc += basis_r_[i].mul_si(long(agg[i - 1]));
    return acc * amp_r_;
}

int ValueComputer::compare_coords(const std::array<int64_t, 4>& a, const std::array<int64_t, 4>& b) const {
    std::array<int64_t, 4> d;
    bool zero = true;
    for (int j = 0; j < 4; ++j) {
        d[j] = a[j] - b[j];
        zero = zero && d[j] == 0;
    }
    if (zero) return 0;
    if (d[1] == 0 && d[2] == 0 && d[3] == 0) return d[0] > 0 ? 1 : -1;
    QuadFieldElement diff(field_, Rational(long(d[0])), Rational(long(d[1])), Rational(long(d[2])),
                          Rational(long(d[3])));
    return diff.sign();
}

Real ValueComputer::coords_gap_real(const std::array<int64_t, 4>& a, const std::array<int64_t, 4>& b) const {
    Real acc = Real::of(long(a[0] - b[0]), prec_);
    for (int j = 1; j < 4; ++j) {
        long d = long(a[j] - b[j]);
        if (d != 0) acc += sr_[j].mul_si(d);
    }
    return (acc / Real::of(den_, prec_)).abs();
}

void ReceivedConstellation::decode_code(int64_t code, int64_t* idx) const {
    for (size_t i = 0; i < radices.size(); ++i) {
        idx[i] = code % radices[i];
        code /= radices[i];
    }
}

namespace {

struct TupleIter {
    std::vector<int64_t> radices;
    std::vector<int64_t> idx;
    bool first = true;
    explicit TupleIter(std::vector<int64_t> r) : radices(std::move(r)), idx(radices.size(), 0) {}
    bool next() {
        if (first) {
            first = false;
            return true;
        }
        for (size_t i = 0; i < radices.size(); ++i) {
            if (++idx[i] < radices[i]) return true;
            idx[i] = 0;
        }
        return false;
    }
};

}  // namespace

ReceivedConstellation enumerate_received(const ReceivedModel& model, const EnumerateOptions& opt) {
    ReceivedConstellation rc;
    rc.model = model;
    int64_t count = model.tuple_count();
    if (count > opt.tuple_cap) {
        double mem = double(count) * double(sizeof(ReceivedConstellation::Entry)) / (1024.0 * 1024.0);
        throw CapExceeded("enumerate_received: " + std::to_string(count) + " tuples exceed cap " +
                          std::to_string(opt.tuple_cap) + " (would need ~" + std::to_string(size_t(mem)) +
                          " MiB)");
    }
    mpfr_prec_t prec = opt.precision ? opt.precision : default_precision();
    rc.values = std::make_shared<ValueComputer>(model, prec);
    const ValueComputer& vc = *rc.values;

    rc.radices.push_back(model.wanted.points.size());
    for (const auto& a : model.aggregates) rc.radices.push_back(a.points.size());

    // Materialize point tables once; point(index) on digit sets does division.
    std::vector<int64_t> wanted_pts(model.wanted.points.size());
    for (int64_t i = 0; i < model.wanted.points.size(); ++i) wanted_pts[i] = model.wanted.points.point(i);
    std::vector<std::vector<int64_t>> agg_pts(model.aggregates.size());
    for (size_t k = 0; k < model.aggregates.size(); ++k) {
        const PointSet& ps = model.aggregates[k].points;
        agg_pts[k].resize(ps.size());
        for (int64_t i = 0; i < ps.size(); ++i) agg_pts[k][i] = ps.point(i);
    }

    rc.entries.reserve(size_t(count));
    TupleIter it(rc.radices);
    std::vector<int64_t> aggv(model.aggregates.size());
    int64_t code = 0;
    while (it.next()) {
        int64_t pt0 = wanted_pts[size_t(it.idx[0])];
        for (size_t k = 0; k < aggv.size(); ++k) aggv[k] = agg_pts[k][size_t(it.idx[k + 1])];
        double v = vc.value_double(pt0, aggv.data());
        rc.entries.push_back({v, code, int32_t(it.idx[0])});
        ++code;
    }

    std::sort(rc.entries.begin(), rc.entries.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.code < b.code;
    });

    // Re-derive tuple values on demand for exact / high-precision work.
    auto points_of = [&](int64_t cod, int64_t& pt0, std::vector<int64_t>& agg) {
        pt0 = wanted_pts[size_t(cod % rc.radices[0])];
        cod /= rc.radices[0];
        for (size_t k = 0; k < agg.size(); ++k) {
            agg[k] = agg_pts[k][size_t(cod % rc.radices[k + 1])];
            cod /= rc.radices[k + 1];
        }
    };
    std::vector<int64_t> agg_a(aggv.size());
    auto coords_of = [&](int64_t cod) {
        int64_t pt0;
        points_of(cod, pt0, agg_a);
        return vc.coords(pt0, agg_a.data());
    };
    auto real_of = [&](int64_t cod) {
        int64_t pt0;
        points_of(cod, pt0, agg_a);
        return vc.value_real(pt0, agg_a.data());
    };

    // Certified ordering: re-sort runs of double-ambiguous neighbors.
    const double thresh = 4 * vc.error_bound();
    size_t i = 0;
    while (i + 1 < rc.entries.size()) {
        size_t j = i;
        while (j + 1 < rc.entries.size() && rc.entries[j + 1].value - rc.entries[j].value <= thresh) ++j;
        if (j > i) {
            auto cmp_exact = [&](const ReceivedConstellation::Entry& a, const ReceivedConstellation::Entry& b) {
                int c;
                if (vc.exact()) {
                    c = vc.compare_coords(coords_of(a.code), coords_of(b.code));
                } else {
                    Real ra = real_of(a.code);
                    Real rb = real_of(b.code);
                    c = ra.cmp(rb);
                }
                if (c != 0) return c < 0;
                return a.code < b.code;
            };
            std::stable_sort(rc.entries.begin() + i, rc.entries.begin() + j + 1, cmp_exact);
        }
        i = (j > i) ? j : i + 1;
    }

    // Collision analysis and same-label coalescing.
    const bool exact = vc.exact();
    double scale = 1.0;
    for (const auto& e : rc.entries) scale = std::max(scale, std::fabs(e.value));
    bool violated = false;
    std::vector<ReceivedConstellation::Entry> out;
    out.reserve(rc.entries.size());
    for (size_t k = 0; k < rc.entries.size(); ++k) {
        const auto& e = rc.entries[k];
        if (!out.empty()) {
            auto& prev = out.back();
            if (e.value - prev.value <= thresh) {
                bool equal;
                if (exact) {
                    equal = vc.compare_coords(coords_of(prev.code), coords_of(e.code)) == 0;
                } else {
                    Real gap = (real_of(e.code) - real_of(prev.code)).abs();
                    equal = gap.to_double() <= opt.gamma_rel_tol * scale;
                }
                if (equal) {
                    bool same_label = rc.model.full_label_injectivity ? false : (prev.symbol == e.symbol);
                    if (same_label) continue;  // coalesce duplicate
                    if (!rc.gamma_witness) rc.gamma_witness = {prev.code, e.code};
                    violated = true;
                    out.push_back(e);
                    continue;
                }
            }
        }
        out.push_back(e);
    }
    rc.entries = std::move(out);

    if (exact)
        rc.gamma = violated ? GammaVerdict::Violated : GammaVerdict::Holds;
    else
        rc.gamma = GammaVerdict::NumericUncertain;  // never a certified "holds"

    // Minimum distance over distinct labels: candidates are the adjacent
    // distinct-label pairs within the double slack of the smallest gap.
    double best_gap = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k + 1 < rc.entries.size(); ++k) {
        if (rc.label_of(rc.entries[k]) == rc.label_of(rc.entries[k + 1])) continue;
        best_gap = std::min(best_gap, rc.entries[k + 1].value - rc.entries[k].value);
    }
    if (violated) {
        rc.has_dmin = true;
        rc.dmin = Real::of(0L, prec);
        rc.dmin_unit = rc.dmin;
        rc.dmin_pair = *rc.gamma_witness;
        if (vc.all_rational()) rc.dmin_unit_exact = Rational(0);
    } else if (best_gap < std::numeric_limits<double>::infinity()) {
        Real amp = model.amplitude.round_to(prec);
        Real best;
        bool have = false;
        std::pair<int64_t, int64_t> pair{-1, -1};
        std::optional<Rational> exact_gap;
        for (size_t k = 0; k + 1 < rc.entries.size(); ++k) {
            const auto& a = rc.entries[k];
            const auto& b = rc.entries[k + 1];
            if (rc.label_of(a) == rc.label_of(b)) continue;
            if (b.value - a.value > best_gap + 2 * thresh) continue;
            Real gap;  // unit amplitude
            std::optional<Rational> gap_q;
            if (exact) {
                auto ca = coords_of(a.code);
                auto cb = coords_of(b.code);
                gap = vc.coords_gap_real(cb, ca);
                if (vc.all_rational())
                    gap_q = make_rational(mpz_class(std::abs(cb[0] - ca[0])), vc.denominator());
            } else {
                gap = (real_of(b.code) - real_of(a.code)).abs() / amp;
            }
            if (!have || gap < best) {
                best = gap;
                have = true;
                pair = {a.code, b.code};
                exact_gap = gap_q;
            }
        }
        rc.has_dmin = have;
        if (have) {
            rc.dmin_unit = best;
            rc.dmin = best * amp;
            rc.dmin_pair = pair;
            rc.dmin_unit_exact = exact_gap;
        }
    }
    return rc;
}

Real min_distance(const ReceivedConstellation& rc) {
    if (!rc.has_dmin)
        throw std::domain_error("min_distance: fewer than two distinct labels in the constellation");
    return rc.dmin;
}

GammaVerdict check_gamma(const ReceivedConstellation& rc) { return rc.gamma; }

DecodeResult hard_decode(const ReceivedConstellation& rc, double y) {
    const auto& es = rc.entries;
    if (es.empty()) throw std::domain_error("hard_decode: empty constellation");
    auto it = std::lower_bound(es.begin(), es.end(), y,
                               [](const ReceivedConstellation::Entry& e, double v) { return e.value < v; });
    size_t hi = size_t(it - es.begin());
    size_t pick;
    if (hi == 0) {
        pick = 0;
    } else if (hi == es.size()) {
        pick = es.size() - 1;
    } else {
        double dlo = y - es[hi - 1].value;
        double dhi = es[hi].value - y;
        pick = (dlo <= dhi) ? hi - 1 : hi;  // tie toward the smaller value
    }
    return {pick, es[pick].symbol, es[pick].code};
}

}  // namespace ria
