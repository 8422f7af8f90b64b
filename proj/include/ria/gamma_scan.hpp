#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ria/rational.hpp"

namespace ria {

/// Exhaustive integer-arithmetic scan of the symmetric multilayer received
/// constellation for a rational gain n/m: values (m b_l + n I_l) summed over
/// levels in base W, b_l < a, I_l <= 2(a-1).  Detects (b, I) collisions and
/// the minimum gap between distinct values (d_min = A * min_gap / m).
struct RationalGammaScan {
    bool holds = false;
    std::optional<std::pair<int64_t, int64_t>> witness;  // colliding tuple codes
    int64_t min_gap = 0;                                 // over the scaled integer values
    int64_t tuple_count = 0;
};

RationalGammaScan gamma_rational_scan(int64_t n, int64_t m, int64_t a, int64_t W, int L,
                                      bool want_min_gap = true);

}  // namespace ria
