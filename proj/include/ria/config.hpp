#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ria/channel.hpp"
#include "ria/random.hpp"

namespace ria {

/// One gain in a config: exact rational literal, exact field coordinates, or
/// a uniform random draw (numeric mode).
struct GainSpec {
    enum class Kind { RationalLit, Coords, RandomUniform } kind = Kind::RationalLit;
    Rational q;
    std::array<Rational, 4> coords;
    double lo = 0.5, hi = 2.0;
    std::string original;

    static GainSpec parse(const std::string& s);
    Gain instantiate(const QuadField& f, RandomSource& rng, mpfr_prec_t prec) const;
    bool is_random() const { return kind == Kind::RandomUniform; }
};

struct ExperimentConfig {
    int version = 1;
    std::string scenario;
    uint64_t seed = 0;
    std::string out_dir = "out";
    double epsilon = 0.1;
    std::vector<double> P;  // strictly increasing
    double sigma2 = 1.0;
    bool sigma2_given = false;
    uint64_t trials = 10000;
    int workers = 1;
    int64_t tuple_cap = 10'000'000;
    QuadField field;
    std::vector<std::vector<GainSpec>> gains;
    nlohmann::json extra;  // scenario-specific knobs

    /// Effective canonical form used for the digest.
    std::string canonical_json() const;
    std::string digest() const;
    std::string h_spec() const;  // compact CSV-safe gain description

    /// Builds the gain matrix for a channel of the given size.
    ChannelInstance channel(size_t rows, size_t cols, double P_value) const;
};

extern const std::vector<std::string> kScenarios;

/// Loads and validates a config file; throws ConfigError on any schema
/// violation.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const nlohmann::json& j);

/// Named quadratic irrationals available to configs and the gain scan.
struct NamedIrrational {
    std::string tag;
    QuadField field;
    std::array<Rational, 4> coords;
};
const std::vector<NamedIrrational>& named_irrationals();
std::optional<NamedIrrational> find_irrational(const std::string& tag);

}  // namespace ria
