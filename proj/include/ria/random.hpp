#pragma once

#include <cstdint>
#include <stdexcept>

namespace ria {

/// Deterministic random source: (seed, stream) fully determine the sequence.
/// Distinct stream indices give statistically independent streams; parallel
/// work derives one stream per block so results are worker-count invariant.
class RandomSource {
  public:
    explicit RandomSource(uint64_t seed, uint64_t stream = 0);

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }
    uint64_t draws() const { return draws_; }

    /// New source with the same seed on a derived stream index.
    RandomSource derive(uint64_t substream) const;

    uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01();
    /// Uniform in (0, 1]; safe as a log argument.
    double uniform_pos();
    /// Uniform integer in [lo, hi], inclusive, unbiased.
    int64_t uniform_int(int64_t lo, int64_t hi);

    /// Zero-mean normal with standard deviation sigma (exactly 0 for sigma=0).
    double gaussian(double sigma);

  private:
    uint64_t seed_ = 0;
    uint64_t stream_ = 0;
    uint64_t draws_ = 0;
    uint64_t s_[4] = {};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

uint64_t splitmix64(uint64_t& state);

}  // namespace ria
