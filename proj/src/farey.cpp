#include "ria/farey.hpp"

#include <stdexcept>

namespace ria {

std::vector<std::pair<int64_t, int64_t>> farey_interior(int64_t order) {
    if (order < 2) throw std::invalid_argument("farey_interior: order >= 2 required");
    std::vector<std::pair<int64_t, int64_t>> out;
    // Next-term recurrence from 0/1, 1/order.
    int64_t a = 0, b = 1, c = 1, d = order;
    while (c < d || (c == 1 && d == 1)) {
        if (a != 0) out.push_back({a, b});
        int64_t k = (order + b) / d;
        int64_t a2 = k * c - a, b2 = k * d - b;
        a = c;
        b = d;
        c = a2;
        d = b2;
        if (a == 1 && b == 1) break;
    }
    return out;
}

}  // namespace ria
