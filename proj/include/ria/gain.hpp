#pragma once

#include <string>
#include <variant>

#include "ria/quad_field.hpp"
#include "ria/real.hpp"

namespace ria {

enum class GainMode { Exact, Numeric };

/// A channel gain in one of two modes.  EXACT gains live in a biquadratic
/// field and power the rank / Property-Gamma / d_min proofs; NUMERIC gains
/// are high-precision reals for "almost sure" random-gain experiments.
class Gain {
  public:
    Gain() : v_(Real::nan()) {}
    static Gain exact(QuadFieldElement e) { return Gain(std::move(e)); }
    static Gain numeric(Real r) { return Gain(std::move(r)); }

    GainMode mode() const { return std::holds_alternative<QuadFieldElement>(v_) ? GainMode::Exact : GainMode::Numeric; }
    bool is_exact() const { return mode() == GainMode::Exact; }

    const QuadFieldElement& exact_value() const { return std::get<QuadFieldElement>(v_); }
    const Real& numeric_value() const { return std::get<Real>(v_); }

    bool is_zero() const {
        return is_exact() ? exact_value().is_zero() : numeric_value().is_zero();
    }
    /// Known-rational test; numeric gains are never certified rational.
    bool is_rational() const { return is_exact() && exact_value().is_rational(); }

    Real value(mpfr_prec_t prec = default_precision()) const {
        return is_exact() ? exact_value().to_real(prec) : numeric_value().round_to(prec);
    }

    Gain operator*(const Gain& o) const { return apply(o, [](auto&& a, auto&& b) { return a * b; }); }
    Gain operator+(const Gain& o) const { return apply(o, [](auto&& a, auto&& b) { return a + b; }); }
    Gain operator-(const Gain& o) const { return apply(o, [](auto&& a, auto&& b) { return a - b; }); }
    Gain operator/(const Gain& o) const {
        if (is_exact()) return Gain(exact_value() / o.exact_value_checked(*this));
        return Gain(numeric_value() / o.numeric_value());
    }
    Gain operator-() const { return is_exact() ? Gain(-exact_value()) : Gain(-numeric_value()); }

    std::string str() const { return is_exact() ? exact_value().str() : numeric_value().str(); }

  private:
    explicit Gain(QuadFieldElement e) : v_(std::move(e)) {}
    explicit Gain(Real r) : v_(std::move(r)) {}

    const QuadFieldElement& exact_value_checked(const Gain&) const { return std::get<QuadFieldElement>(v_); }

    template <class F>
    Gain apply(const Gain& o, F&& f) const {
        if (mode() != o.mode()) throw std::invalid_argument("mixed gain modes in arithmetic");
        if (is_exact()) return Gain(f(exact_value(), o.exact_value()));
        return Gain(f(numeric_value(), o.numeric_value()));
    }

    std::variant<QuadFieldElement, Real> v_;
};

}  // namespace ria
