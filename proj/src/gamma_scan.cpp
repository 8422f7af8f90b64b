#include "ria/gamma_scan.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ria {

RationalGammaScan gamma_rational_scan(int64_t n, int64_t m, int64_t a, int64_t W, int L,
                                      bool want_min_gap) {
    if (n < 1 || m < 1) throw std::invalid_argument("gamma scan: h = n/m must be positive");
    if (a < 1 || W < 2 || a > W) throw std::invalid_argument("gamma scan: need 1 <= a <= W");
    if (L < 1) throw std::invalid_argument("gamma scan: L >= 1 required");

    RationalGammaScan out;
    const int64_t nb = a, ni = 2 * a - 1;
    const int64_t per_level = nb * ni;

    // Level values c = m b + n I, enumerated in tuple-code order (b fast).
    std::vector<int64_t> level(per_level);
    for (int64_t i = 0; i < ni; ++i)
        for (int64_t b = 0; b < nb; ++b) level[size_t(i * nb + b)] = m * b + n * i;

    int64_t cmax = level.back();
    for (int64_t v : level) cmax = std::max(cmax, v);

    // value bound: cmax * (W^L - 1)/(W - 1)
    __int128 vmax = 0, wl = 1;
    for (int l = 0; l < L; ++l) {
        vmax += __int128(cmax) * wl;
        wl *= W;
    }
    if (vmax > (__int128(1) << 40))
        throw std::overflow_error("gamma scan: value range too large for the bitmap");
    const int64_t VMAX = int64_t(vmax);

    int64_t total = 1;
    for (int l = 0; l < L; ++l) total *= per_level;
    out.tuple_count = total;

    std::vector<uint64_t> bitmap(size_t(VMAX / 64 + 2), 0);
    auto test_set = [&](int64_t v) {
        uint64_t& w = bitmap[size_t(v >> 6)];
        uint64_t bit = 1ULL << (v & 63);
        bool was = (w & bit) != 0;
        w |= bit;
        return was;
    };

    // Walk all c-vectors in tuple-code order (level 0 fastest).
    std::vector<int64_t> pow_w(size_t(L), 1);
    for (int l = 1; l < L; ++l) pow_w[size_t(l)] = pow_w[size_t(l - 1)] * W;

    bool collision = false;
    int64_t collide_code = -1;
    {
        std::vector<int64_t> idx(size_t(L), 0);
        int64_t value = 0;
        int64_t code = 0;
        for (;;) {
            if (test_set(value)) {
                collision = true;
                collide_code = code;
                break;
            }
            ++code;
            int l = 0;
            for (; l < L; ++l) {
                value -= level[size_t(idx[size_t(l)])] * pow_w[size_t(l)];
                if (++idx[size_t(l)] < per_level) {
                    value += level[size_t(idx[size_t(l)])] * pow_w[size_t(l)];
                    break;
                }
                idx[size_t(l)] = 0;
                value += level[0] * pow_w[size_t(l)];
            }
            if (l == L) break;
        }
    }

    if (collision) {
        out.holds = false;
        // Recover the earlier tuple with the same value.
        std::unordered_map<int64_t, int64_t> seen;
        std::vector<int64_t> idx(size_t(L), 0);
        int64_t value = 0, code = 0;
        for (;;) {
            auto [it, fresh] = seen.emplace(value, code);
            if (!fresh && code == collide_code) {
                out.witness = {it->second, code};
                break;
            }
            ++code;
            int l = 0;
            for (; l < L; ++l) {
                value -= level[size_t(idx[size_t(l)])] * pow_w[size_t(l)];
                if (++idx[size_t(l)] < per_level) {
                    value += level[size_t(idx[size_t(l)])] * pow_w[size_t(l)];
                    break;
                }
                idx[size_t(l)] = 0;
                value += level[0] * pow_w[size_t(l)];
            }
            if (l == L) break;
        }
        return out;
    }

    out.holds = true;
    if (want_min_gap) {
        int64_t prev = -1, best = INT64_MAX;
        for (int64_t word = 0; word <= VMAX / 64 + 1; ++word) {
            uint64_t w = bitmap[size_t(word)];
            while (w) {
                int bit = __builtin_ctzll(w);
                w &= w - 1;
                int64_t v = word * 64 + bit;
                if (prev >= 0) best = std::min(best, v - prev);
                prev = v;
                if (best == 1) break;
            }
            if (best == 1) break;
        }
        out.min_gap = (best == INT64_MAX) ? 0 : best;
    }
    return out;
}

}  // namespace ria
