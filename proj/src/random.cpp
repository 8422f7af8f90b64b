#include "ria/random.hpp"

#include <cmath>

namespace ria {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {
inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}

RandomSource::RandomSource(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
    // xoshiro256++ state from a splitmix chain over (seed, stream).
    uint64_t st = seed;
    uint64_t mix = splitmix64(st);
    st ^= 0xA3EC647659359ACDULL ^ stream;
    (void)mix;
    for (auto& w : s_) w = splitmix64(st);
    // Avoid an all-zero state (cannot happen with splitmix64 in practice, but cheap).
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

RandomSource RandomSource::derive(uint64_t substream) const {
    uint64_t st = stream_ ^ 0x9E3779B97F4A7C15ULL;
    uint64_t child = splitmix64(st) ^ (substream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    return RandomSource(seed_, child);
}

uint64_t RandomSource::next_u64() {
    ++draws_;
    uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RandomSource::uniform01() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform_pos() {
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

int64_t RandomSource::uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
    uint64_t range = uint64_t(hi) - uint64_t(lo) + 1;
    if (range == 0) return int64_t(next_u64());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return lo + int64_t(v % range);
}

double RandomSource::gaussian(double sigma) {
    if (sigma < 0) throw std::invalid_argument("gaussian: negative sigma");
    if (has_spare_) {
        has_spare_ = false;
        return sigma * spare_;
    }
    // Box-Muller; u in (0,1] keeps the log finite.
    double u = uniform_pos();
    double v = uniform01();
    double r = std::sqrt(-2.0 * std::log(u));
    double c = std::cos(2.0 * M_PI * v);
    double s = std::sin(2.0 * M_PI * v);
    spare_ = r * s;
    has_spare_ = true;
    return sigma * (r * c);
}

}  // namespace ria
