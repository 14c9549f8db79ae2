#pragma once

#include "sutured/dynamics/geometry.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace sutured::dynamics {

// Value and first two derivatives of a radial profile.
struct Jet {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

// Quintic smoothstep from 0 at r <= lo to 1 at r >= hi; C2 at both ends.
Jet smooth_ramp(double r, double lo, double hi);

// Raised when model or form constants violate their constraints.
class InvalidModel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Area density and region radii of the piecewise Liouville form.
struct PiecewiseLiouville {
    double eps_c = 0.01;
    double eps_sym = 0.1;

    void validate() const;
};

struct ModelConfig {
    std::int64_t n = 1;
    std::int64_t k = 3;
    double mu = 1.0;
    double m_gauss = 50.0;
    std::optional<double> amplitude;      // default e * mu / m_gauss
    std::optional<double> core_constant;  // default: matches the Gaussian stage at the origin
    double eps_scale = 1e-3;
    double r_sing = 1.0;
    double r_cut = 1.2;
    double delta = 0.01;  // time-1 core rotation divided by 2 pi

    // Ramp endpoints as multiples of the critical radius.
    double core_blend_lo = 0.5;
    double core_blend_hi = 0.7;
    double exp_cut_lo = 1.25;
    double exp_cut_hi = 3.0;
    double g_cut_lo = 3.0;
    double g_cut_hi = 6.0;
    double density_inner_lo = 0.3;
    double density_inner_hi = 0.45;
    double density_outer_lo = 1.5;  // outer ramp ends at r_sing
};

enum class Stage {
    Singular,  // mu r^2 cos(M theta)
    Gaussian,  // plus the uncut radial well that creates the critical circle
    Cutoff,    // radial well cut off away from the critical circle
    Core,      // core profile blended in near the origin
    Full,      // outer multiplier applied
};

struct Hessian {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

class HamiltonianModel {
public:
    HamiltonianModel(const ModelConfig& config, const PiecewiseLiouville& form = {});

    const ModelConfig& config() const { return config_; }
    const PiecewiseLiouville& form() const { return form_; }

    std::int64_t n() const { return config_.n; }
    std::int64_t k() const { return config_.k; }
    std::int64_t symmetry_order() const { return order_; }  // n|k|
    double mu() const { return config_.mu; }
    double eps() const { return config_.eps_scale; }
    double amplitude() const { return amplitude_; }
    double well_offset() const { return well_offset_; }
    double critical_radius() const { return r_c_; }
    double B() const { return B_; }
    double C() const { return C_; }
    double B_tilde() const { return B_ * config_.eps_scale; }
    double C_tilde() const { return C_ * config_.eps_scale; }
    double delta() const { return config_.delta; }

    // Largest radius where H equals its core quadratic and the density is eps_c.
    double core_radius() const;
    // Radius band with density eps_sym around the critical circle.
    double sym_inner_radius() const;
    double sym_outer_radius() const;
    // Beyond this radius H is mu r^2 cos(M theta) with unit density.
    double exterior_radius() const { return 2.0 * config_.r_cut; }

    // Saddle coefficient a in the local normal form H = a x y.
    double saddle_coefficient() const;

    double value(Vec2 p, Stage stage = Stage::Full) const;
    Vec2 gradient(Vec2 p) const;
    Hessian hessian(Vec2 p) const;

    // Area density rho with d(beta) = rho dx ^ dy, and its radial derivatives.
    Jet density(double r) const;

    // Radial pieces of the full H = G(r) + K(r) cos(M theta).
    Jet radial_part(double r) const;
    Jet angular_amplitude(double r) const;

private:
    ModelConfig config_;
    PiecewiseLiouville form_;
    std::int64_t order_ = 0;
    double amplitude_ = 0.0;
    double well_offset_ = 0.0;
    double r_c_ = 0.0;
    double B_ = 0.0;
    double C_ = 0.0;

    Jet well(double r, bool cut) const;
    Jet core_blend(double r) const;
    Jet outer_multiplier(double r) const;
};

// Stage-aware evaluation of H.
inline double eval_H(const HamiltonianModel& model, Vec2 p, Stage stage = Stage::Full) {
    return model.value(p, stage);
}

}  // namespace sutured::dynamics
