#pragma once

#include <vector>

#include "ria/gain.hpp"

namespace ria {

/// Gain matrix h[i][j] (receiver i, transmitter j) plus power and noise.
struct ChannelInstance {
    std::vector<std::vector<Gain>> h;
    double P = 1.0;
    double sigma2 = 1.0;

    size_t users() const { return h.size(); }
    double snr() const { return P / sigma2; }
    GainMode mode() const { return h.at(0).at(0).mode(); }

    /// Validates shape (rows x cols), nonzero gains, uniform mode.
    void validate(size_t rows, size_t cols) const;
};

}  // namespace ria
