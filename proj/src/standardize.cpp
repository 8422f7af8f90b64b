#include "ria/standardize.hpp"

#include <algorithm>
#include <stdexcept>

namespace ria {

void ChannelInstance::validate(size_t rows, size_t cols) const {
    if (h.size() != rows) throw std::invalid_argument("channel: expected " + std::to_string(rows) + " rows");
    GainMode m = mode();
    for (const auto& row : h) {
        if (row.size() != cols) throw std::invalid_argument("channel: ragged gain matrix");
        for (const auto& g : row) {
            if (g.mode() != m) throw std::invalid_argument("channel: mixed gain modes");
            if (g.is_zero()) throw std::invalid_argument("channel: zero gain");
        }
    }
    if (P <= 0 || sigma2 < 0) throw std::invalid_argument("channel: P > 0 and sigma2 >= 0 required");
}

StandardizedThreeUser standardize_three_user(const ChannelInstance& ch) {
    ch.validate(3, 3);
    const auto& h = ch.h;
    auto H = [&](int i, int j) { return h[i - 1][j - 1]; };

    StandardizedThreeUser s;
    s.mode = ch.mode();
    s.g0 = (H(1, 3) * H(2, 1) * H(3, 2)) / (H(1, 2) * H(2, 3) * H(3, 1));
    s.g1_displayed = (H(1, 1) * H(1, 2) * H(2, 3)) / (H(1, 2) * H(2, 1) * H(1, 3));
    s.g1 = (H(1, 1) * H(2, 3)) / (H(2, 1) * H(1, 3));
    s.g2 = (H(2, 2) * H(1, 3)) / (H(1, 2) * H(2, 3));
    s.g3 = (H(3, 3) * H(1, 2) * H(2, 1)) / (H(1, 2) * H(2, 3) * H(3, 1));

    s.tx_scale = {H(2, 3) * H(1, 2) / H(2, 1), H(1, 3), H(1, 2)};
    // Receiver divisors that reproduce the standard form; the third is
    // h12 h23 h31 / h21 (the coefficient h31 * tx_scale[0] picks up at y3).
    s.rx_divisor = {H(1, 2) * H(1, 3), H(1, 2) * H(2, 3), H(1, 2) * H(2, 3) * H(3, 1) / H(2, 1)};

    for (int i = 0; i < 3; ++i) {
        double t = s.tx_scale[i].value(64).to_double();
        double r = s.rx_divisor[i].value(64).to_double();
        s.power[i] = ch.P / (t * t);
        s.noise2[i] = ch.sigma2 / (r * r);
    }
    // Conservative sandwich channel: smallest power, largest noise.
    s.P = *std::min_element(s.power.begin(), s.power.end());
    s.sigma2 = *std::max_element(s.noise2.begin(), s.noise2.end());
    return s;
}

StandardFormCheck verify_standard_form(const ChannelInstance& ch, const StandardizedThreeUser& s) {
    if (ch.mode() != GainMode::Exact)
        throw std::invalid_argument("verify_standard_form: EXACT gains required");
    const QuadField& f = ch.h[0][0].exact_value().field();
    QuadFieldElement one = QuadFieldElement::rational(f, Rational(1));
    auto eff = [&](int i, int j) {
        return (ch.h[i][j] * s.tx_scale[j] / s.rx_divisor[i]).exact_value();
    };
    StandardFormCheck out;
    out.cross_unit_ok = eff(0, 1) == one && eff(0, 2) == one && eff(1, 0) == one && eff(1, 2) == one &&
                        eff(2, 0) == one && eff(2, 1) == s.g0.exact_value();
    out.diag_ok = eff(0, 0) == s.g1.exact_value() && eff(1, 1) == s.g2.exact_value() &&
                  eff(2, 2) == s.g3.exact_value();
    out.g1_forms_agree = s.g1.exact_value() == s.g1_displayed.exact_value();
    return out;
}

ChannelInstance standard_channel(const StandardizedThreeUser& s) {
    Gain one = s.mode == GainMode::Exact
                   ? Gain::exact(QuadFieldElement::rational(s.g0.is_exact() ? s.g0.exact_value().field() : QuadField(),
                                                            Rational(1)))
                   : Gain::numeric(Real::of(1L));
    ChannelInstance ch;
    ch.h = {{s.g1, one, one}, {one, s.g2, one}, {one, s.g0, s.g3}};
    ch.P = s.P;
    ch.sigma2 = s.sigma2;
    return ch;
}

}  // namespace ria
