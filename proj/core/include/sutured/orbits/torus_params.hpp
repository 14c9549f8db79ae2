#pragma once

#include "sutured/linalg/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace sutured::orbits {

using linalg::Rational;

// Rotation offset taken in the limit 0+.
struct SymbolicPlus {
    friend bool operator==(const SymbolicPlus&, const SymbolicPlus&) = default;
};

// Rotation offset fixed to a positive rational.
struct ExplicitDelta {
    Rational delta;
    friend bool operator==(const ExplicitDelta&, const ExplicitDelta&) = default;
};

using DeltaMode = std::variant<SymbolicPlus, ExplicitDelta>;

// Thrown when parameters violate a model constraint. The message names the constraint.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Suture data (n, k, l) plus model constants. Validated on construction.
class TorusParams {
public:
    TorusParams(std::int64_t n, std::int64_t k, std::int64_t l,
                Rational half_length = Rational(1),
                Rational elliptic_surplus = Rational(1, 10),
                DeltaMode mode = SymbolicPlus{});

    std::int64_t n() const { return n_; }
    std::int64_t k() const { return k_; }
    std::int64_t l() const { return l_; }
    std::int64_t abs_k() const { return k_ < 0 ? -k_ : k_; }
    int sign_k() const { return k_ < 0 ? -1 : 1; }
    const Rational& half_length() const { return half_length_; }
    const Rational& elliptic_surplus() const { return elliptic_surplus_; }
    const DeltaMode& delta_mode() const { return mode_; }
    bool symbolic() const { return std::holds_alternative<SymbolicPlus>(mode_); }

    // Largest m with m * delta < 1/|k|; empty in symbolic mode (no horizon).
    std::optional<std::int64_t> n_delta() const { return n_delta_; }

    TorusParams with_mode(DeltaMode mode) const;
    TorusParams with_k(std::int64_t k) const;

    std::string describe() const;

    friend bool operator==(const TorusParams&, const TorusParams&) = default;

private:
    std::int64_t n_;
    std::int64_t k_;
    std::int64_t l_;
    Rational half_length_;
    Rational elliptic_surplus_;
    DeltaMode mode_;
    std::optional<std::int64_t> n_delta_;
};

// max{m >= 0 : m * delta < 1/abs_k}, saturated at INT64_MAX.
std::int64_t delta_horizon(const Rational& delta, std::int64_t abs_k);

}  // namespace sutured::orbits
