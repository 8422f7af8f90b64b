#pragma once

#include <array>

#include "ria/channel.hpp"

namespace ria {

/// A three-user channel in standard form: all cross gains are 1 except the
/// second cross gain at receiver 3, which is G0.
///   y1 = G1 x1 + x2 + x3
///   y2 = G2 x2 + x1 + x3
///   y3 = G3 x3 + x1 + G0 x2
struct StandardizedThreeUser {
    Gain g0, g1, g2, g3;
    Gain g1_displayed;  // same value with the cancellable h12 factor kept

    std::array<Gain, 3> tx_scale;   // x_j = tx_scale[j] * x~_j
    std::array<Gain, 3> rx_divisor; // y~_i = y_i / rx_divisor[i]

    std::array<double, 3> power;    // per-user effective power after scaling
    std::array<double, 3> noise2;   // per-receiver effective noise variance
    double P = 0;                   // conservative common power (min of the three)
    double sigma2 = 0;              // conservative common noise (max of the three)
    GainMode mode = GainMode::Exact;
};

/// Linear transmit/receive scalings to standard form: exact G0..G3 and the conservative
/// sandwich channel's common power and noise.
StandardizedThreeUser standardize_three_user(const ChannelInstance& ch);

/// The standard channel as a gain matrix (for feeding the single-stream
/// builder when G0 is rational).
ChannelInstance standard_channel(const StandardizedThreeUser& s);

/// Re-derives the end-to-end channel from the transmit/receive
/// scalings and checks, exactly, that it lands in standard form (cross gains
/// 1, receiver-3 second cross gain G0) and that the displayed and reduced G1
/// expressions agree.  EXACT mode only.
struct StandardFormCheck {
    bool cross_unit_ok = false;
    bool diag_ok = false;
    bool g1_forms_agree = false;
    bool all() const { return cross_unit_ok && diag_ok && g1_forms_agree; }
};
StandardFormCheck verify_standard_form(const ChannelInstance& ch, const StandardizedThreeUser& s);

}  // namespace ria
