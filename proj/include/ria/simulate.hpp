#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ria/khintchine.hpp"
#include "ria/random.hpp"
#include "ria/received.hpp"
#include "ria/scaling.hpp"

namespace ria {

struct SimulationResult {
    std::string stream_id;
    uint64_t trials = 0;
    uint64_t errors = 0;
    double pe = 0;
    double dmin = 0;         // amplitude-scaled
    double union_bound = 0;  // exp(-dmin^2 / 8 sigma^2)
    double q_bound = 0;      // Q(dmin / 2 sigma)
    double rate_bound = 0;   // max(0, (1-pe) log2|U0| - 1), bits per use
    double log2_card = 0;
    double P = 0;
    double sigma2 = 0;
    uint64_t seed = 0;
};

/// Monte Carlo symbol error rate of the hard decoder: uniform transmit
/// tuples, AWGN, nearest-point decoding, per-stream symbol comparison.
/// Trials are partitioned into fixed blocks, each on a derived random
/// stream, so the result is invariant to the worker count.
SimulationResult simulate(const ReceivedModel& model, const ReceivedConstellation& rc, double sigma,
                          uint64_t trials, const RandomSource& rng, int workers = 1);

struct SweepPoint {
    double P = 0;
    std::vector<SimulationResult> streams;
    double sum_rate = 0;
    double r_of_P = 0;  // sum_rate / (0.5 log2 P)
};

struct SweepResult {
    std::vector<SweepPoint> points;  // sorted by P ascending
    double pe_threshold = 1e-2;
};

/// Least-squares slope of sum rate against 0.5 log2 P over points whose
/// worst stream error rate is below the threshold; needs >= 3 usable points.
double dof_slope(const SweepResult& sweep, double pe_threshold = 1e-2);

struct DminCheck {
    std::string name;
    double bound = 0;
    double measured = 0;
    bool pass = false;
    std::string note;
};

struct DminReport {
    std::vector<DminCheck> checks;
    bool all_pass = true;
};

struct DminExtras {
    bool kg_requested = false;
    std::vector<KhintchineEstimate> kappa;       // kappa for the KG lower bound
    std::optional<Rational> rational_h;          // h = n/m for the exact A/m equality
    std::optional<IrrationalSelection> irr_sel;  // for the A (1/m - 4(a-1)|delta|) bound
};

/// Checks every applicable minimum-distance bound against the enumerated
/// constellation and reports (bound, measured, pass) per check.
DminReport verify_dmin_bounds(const ReceivedModel& model, const ReceivedConstellation& rc,
                              const DminExtras& extras);

}  // namespace ria
