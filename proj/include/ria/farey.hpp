#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ria {

/// Farey fractions of the given order strictly inside (0, 1), ascending.
std::vector<std::pair<int64_t, int64_t>> farey_interior(int64_t order);

}  // namespace ria
