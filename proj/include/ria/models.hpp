#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ria/channel.hpp"
#include "ria/constellation.hpp"
#include "ria/scaling.hpp"
#include "ria/standardize.hpp"

namespace ria {

/// One data stream at a transmitter: a direction and a constellation.
struct TransmitScheme {
    std::string transmitter;
    struct Entry {
        std::string stream_id;
        Gain direction;
        PointSet points;
    };
    std::vector<Entry> entries;
    Real amplitude;

    /// max |sum_i direction_i * u_i| over the constellations (numeric).
    double worst_case_magnitude() const;
};

struct AggregateTerm {
    int stream;     // index into ReceivedModel::others
    int64_t coeff;  // integer coefficient
};

/// One aligned interference aggregate I_k with its basis gain G_k.
struct AggregateSpec {
    Gain basis;
    std::vector<AggregateTerm> terms;
    PointSet points;  // enumeration domain of the aggregate value
    int64_t bound;    // Q_k = max |I_k|
};

/// The received signal rearranged as y = A (G0 u0 + sum_k G_k I_k) + z.
struct ReceivedModel {
    GainMode mode = GainMode::Exact;
    std::string receiver;
    std::string stream_id;  // the stream this model decodes
    Gain g0;
    struct StreamRef {
        std::string id;
        PointSet points;
    };
    StreamRef wanted;
    std::vector<StreamRef> others;        // interfering streams
    std::vector<AggregateSpec> aggregates;
    Real amplitude;
    double P = 0;
    double sigma2 = 1;
    double epsilon = 0;
    int scaling_m = 0;  // m used in the Q / amplitude exponents

    /// Multilayer models must expose the full (b, I) labeling; single layer
    /// models only need the wanted symbol (many-to-one map allowed).
    bool full_label_injectivity = false;

    bool degenerate = false;
    std::string degeneracy_note;

    size_t m() const { return aggregates.size(); }
    /// |U0| * prod_k |I_k|
    int64_t tuple_count() const;
};

struct XChannelModels {
    std::array<TransmitScheme, 2> tx;
    std::vector<ReceivedModel> rx;  // u1, u2 at receiver 1; v1, v2 at receiver 2
    PowerScaling q_scaling;
};

/// Two-user X channel: x1 = G(h22 u1 + h12 v1), x2 = G(h21 u2 + h11 v2);
/// v1+v2 aligns at receiver 1 and u1+u2 at receiver 2, m = 2 everywhere.
XChannelModels x_channel_models(const ChannelInstance& ch, double epsilon);

struct GicModels {
    std::vector<TransmitScheme> tx;
    std::vector<ReceivedModel> rx;
};

/// K-user single-stream scheme; per receiver, interference is aggregated on
/// an exact rational basis of its cross gains (coefficients cleared to
/// integers, common denominators folded into the basis gains).
GicModels gic_single_stream_models(const ChannelInstance& ch, double epsilon);

/// Raised by the asymmetric three-user builder when G0 is rational; the
/// single-stream scheme with m = 1 applies instead.
struct RationalG0 : std::runtime_error {
    explicit RationalG0(const std::string& msg) : std::runtime_error(msg) {}
};

/// Asymmetric three-user scheme on a standard channel: user 1 sends u1 and
/// u1' on directions {1, G0}; four models, all with m = 2.
GicModels gic3_asymmetric_models(const StandardizedThreeUser& s, double epsilon);

struct SymmetricMultilayerModel {
    TransmitScheme tx;
    ReceivedModel rx;
    MultiLayerConstellation constellation;
};

/// Symmetric three-user channel y1 = x1 + h(x2 + x3) + z with the shared
/// multilayer constellation; per-level aggregates I_l = b'_l + b''_l align
/// into a single base-W integer aggregate.
SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, int64_t W, int64_t a, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override = {});

SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, const RationalSelection& sel, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override = {});

SymmetricMultilayerModel symmetric_multilayer_model(const Gain& h, const IrrationalSelection& sel, int L,
                                                    double P, double sigma2,
                                                    std::optional<Real> amplitude_override = {});

}  // namespace ria
