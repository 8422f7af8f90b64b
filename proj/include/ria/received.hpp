#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "ria/models.hpp"

namespace ria {

enum class GammaVerdict { Holds, Violated, NumericUncertain };

const char* verdict_name(GammaVerdict v);

/// Evaluates received values for tuples of a model, in three forms: fast
/// double (with a rigorous absolute error bound), working-precision Real,
/// and, in EXACT mode, integer field coordinates (times a common
/// denominator) that make equality and sign decisions exact.
class ValueComputer {
  public:
    ValueComputer(const ReceivedModel& model, mpfr_prec_t prec);

    bool exact() const { return exact_; }
    mpfr_prec_t precision() const { return prec_; }
    double error_bound() const { return err_; }  // on value_double, amplitude included
    double amplitude_double() const { return amp_d_; }

    /// Amplitude-scaled value from the wanted point and aggregate values.
    double value_double(int64_t pt0, const int64_t* agg) const;
    Real value_real(int64_t pt0, const int64_t* agg) const;

    /// EXACT mode only: integer coordinates of the unit-amplitude value
    /// times the common denominator.
    std::array<int64_t, 4> coords(int64_t pt0, const int64_t* agg) const;
    /// Exact comparison of two coordinate vectors as real values.
    int compare_coords(const std::array<int64_t, 4>& a, const std::array<int64_t, 4>& b) const;
    /// Unit-amplitude value of a coordinate difference at working precision.
    Real coords_gap_real(const std::array<int64_t, 4>& a, const std::array<int64_t, 4>& b) const;

    const mpz_class& denominator() const { return den_; }
    /// True when every entry value is rational (all irrational coordinates
    /// vanish); unit-amplitude gaps are then exact rationals.
    bool all_rational() const { return all_rational_; }

  private:
    bool exact_ = false;
    bool all_rational_ = false;
    mpfr_prec_t prec_;
    size_t nbasis_ = 0;
    QuadField field_;
    // EXACT mode: per-basis integer coordinates (times den_).
    std::vector<std::array<int64_t, 4>> ibasis_;
    mpz_class den_{1};
    double inv_den_d_ = 1;
    std::array<double, 4> sd_{1, 0, 0, 0};  // 1, sqrt(d1), sqrt(d2), sqrt(d1 d2)
    std::array<Real, 4> sr_;
    // NUMERIC mode: basis gain values.
    std::vector<double> basis_d_;
    std::vector<Real> basis_r_;
    double amp_d_ = 1;
    Real amp_r_;
    double err_ = 0;
};

struct EnumerateOptions {
    int64_t tuple_cap = 10'000'000;
    mpfr_prec_t precision = 0;      // 0 = default_precision()
    double gamma_rel_tol = 0x1p-80; // numeric-mode collision tolerance (relative)
};

/// The enumerated, sorted, labeled received constellation.
struct ReceivedConstellation {
    ReceivedModel model;
    std::shared_ptr<ValueComputer> values;

    struct Entry {
        double value;    // amplitude-scaled, double approximation of the sort key
        int64_t code;    // mixed-radix tuple code, wanted index least significant
        int32_t symbol;  // wanted-stream point index
    };
    std::vector<Entry> entries;  // ascending; same-label duplicates coalesced
    std::vector<int64_t> radices;

    GammaVerdict gamma = GammaVerdict::NumericUncertain;
    std::optional<std::pair<int64_t, int64_t>> gamma_witness;  // tuple codes

    bool has_dmin = false;
    Real dmin;       // amplitude-scaled minimum distinct-label gap
    Real dmin_unit;  // without the amplitude factor
    std::optional<Rational> dmin_unit_exact;  // set when values are rational
    std::pair<int64_t, int64_t> dmin_pair{-1, -1};

    int64_t label_of(const Entry& e) const { return model.full_label_injectivity ? e.code : e.symbol; }
    void decode_code(int64_t code, int64_t* idx) const;
    int64_t wanted_point(const Entry& e) const { return model.wanted.points.point(e.symbol); }
};

ReceivedConstellation enumerate_received(const ReceivedModel& model, const EnumerateOptions& opt = {});

/// Minimum distance over points with distinct labels (same-label
/// coincidences are benign for the many-to-one map).
Real min_distance(const ReceivedConstellation& rc);

GammaVerdict check_gamma(const ReceivedConstellation& rc);

struct DecodeResult {
    size_t entry;
    int32_t symbol;
    int64_t code;
};

/// Nearest-point hard decoder; ties break toward the smaller value.
DecodeResult hard_decode(const ReceivedConstellation& rc, double y);

}  // namespace ria
