#include "sutured/dynamics/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sutured::dynamics {

Jet smooth_ramp(double r, double lo, double hi) {
    if (r <= lo) return {0.0, 0.0, 0.0};
    if (r >= hi) return {1.0, 0.0, 0.0};
    double w = hi - lo;
    double u = (r - lo) / w;
    double u2 = u * u;
    double u3 = u2 * u;
    double v = u3 * (10.0 + u * (-15.0 + 6.0 * u));
    double d1 = 30.0 * u2 * (1.0 - u) * (1.0 - u) / w;
    double d2 = 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u) / (w * w);
    return {v, d1, d2};
}

void PiecewiseLiouville::validate() const {
    constexpr double slack = 1e-12;
    if (!(eps_c > 0.0) || !(eps_sym > 0.0)) {
        throw InvalidModel("eps_c and eps_sym must be positive");
    }
    if (eps_c > eps_sym / 10.0 + slack || eps_sym / 10.0 > 0.01 + slack) {
        throw InvalidModel("require eps_c <= eps_sym/10 <= 1/100");
    }
}

namespace {

Jet product(const Jet& f, const Jet& g) {
    return {f.v * g.v, f.d1 * g.v + f.v * g.d1, f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2};
}

Jet sum(const Jet& f, const Jet& g) { return {f.v + g.v, f.d1 + g.d1, f.d2 + g.d2}; }

Jet scaled(double s, const Jet& f) { return {s * f.v, s * f.d1, s * f.d2}; }

Jet one_minus(const Jet& f) { return {1.0 - f.v, -f.d1, -f.d2}; }

}  // namespace

HamiltonianModel::HamiltonianModel(const ModelConfig& config, const PiecewiseLiouville& form)
    : config_(config), form_(form) {
    form_.validate();
    const auto& c = config_;
    if (c.n < 1) throw InvalidModel("n must be at least 1");
    if (c.k > -2 && c.k < 2) throw InvalidModel("|k| must be at least 2");
    if (!(c.mu > 0.0)) throw InvalidModel("mu must be positive");
    if (!(c.m_gauss > 0.0)) throw InvalidModel("mGauss must be positive");
    if (!(c.eps_scale > 0.0 && c.eps_scale < 1.0)) throw InvalidModel("eps scale must lie in (0,1)");
    if (!(c.delta > 0.0)) throw InvalidModel("delta must be positive");

    order_ = c.n * (c.k < 0 ? -c.k : c.k);
    amplitude_ = c.amplitude.value_or(std::numbers::e * c.mu / c.m_gauss);
    if (!(c.m_gauss * amplitude_ > c.mu)) throw InvalidModel("require mGauss * A > mu");

    double log_ratio = std::log(c.m_gauss * amplitude_ / c.mu);
    r_c_ = std::sqrt(log_ratio / c.m_gauss);
    well_offset_ = (c.mu / c.m_gauss) * (log_ratio + 1.0);
    if (!(r_c_ < c.r_sing && c.r_sing < c.r_cut)) {
        throw InvalidModel("require r_c < r_sing < Rcut");
    }
    if (!(c.density_inner_lo < c.density_inner_hi && c.density_inner_hi <= c.core_blend_lo &&
          c.core_blend_lo < c.core_blend_hi && c.core_blend_hi < 1.0)) {
        throw InvalidModel("inner ramps must be ordered and end inside the critical radius");
    }
    if (!(1.0 < c.exp_cut_lo && c.exp_cut_lo < c.exp_cut_hi && c.exp_cut_hi <= c.g_cut_lo &&
          c.g_cut_lo < c.g_cut_hi && c.density_outer_lo > 1.0)) {
        throw InvalidModel("outer cutoffs must be ordered and start beyond the critical radius");
    }
    if (!(c.g_cut_hi * r_c_ <= c.r_sing && c.density_outer_lo * r_c_ < c.r_sing)) {
        throw InvalidModel("cutoffs must finish inside r_sing");
    }

    B_ = std::numbers::pi * form_.eps_c * c.delta / c.eps_scale;
    C_ = c.core_constant.value_or(amplitude_ - well_offset_);
    if (!(C_ > 0.0)) throw InvalidModel("core constant C must be positive");
}

double HamiltonianModel::core_radius() const { return config_.density_inner_lo * r_c_; }
double HamiltonianModel::sym_inner_radius() const { return config_.density_inner_hi * r_c_; }
double HamiltonianModel::sym_outer_radius() const { return config_.density_outer_lo * r_c_; }

double HamiltonianModel::saddle_coefficient() const {
    double log_ratio = std::log(config_.m_gauss * amplitude_ / config_.mu);
    return 2.0 * static_cast<double>(order_) * config_.mu * config_.eps_scale * std::sqrt(log_ratio);
}

Jet HamiltonianModel::well(double r, bool cut) const {
    double m = config_.m_gauss;
    double e = std::exp(-m * r * r);
    Jet gauss{-amplitude_ * e, 2.0 * m * r * amplitude_ * e,
              amplitude_ * e * (2.0 * m - 4.0 * m * m * r * r)};
    Jet offset{well_offset_, 0.0, 0.0};
    if (!cut) return sum(gauss, offset);
    Jet chi_f = one_minus(smooth_ramp(r, config_.exp_cut_lo * r_c_, config_.exp_cut_hi * r_c_));
    Jet chi_g = one_minus(smooth_ramp(r, config_.g_cut_lo * r_c_, config_.g_cut_hi * r_c_));
    return sum(product(gauss, chi_f), product(offset, chi_g));
}

Jet HamiltonianModel::core_blend(double r) const {
    return smooth_ramp(r, config_.core_blend_lo * r_c_, config_.core_blend_hi * r_c_);
}

Jet HamiltonianModel::outer_multiplier(double r) const {
    Jet s = smooth_ramp(r, config_.r_cut, 2.0 * config_.r_cut);
    double eps = config_.eps_scale;
    return {eps + (1.0 - eps) * s.v, (1.0 - eps) * s.d1, (1.0 - eps) * s.d2};
}

Jet HamiltonianModel::radial_part(double r) const {
    Jet sigma = core_blend(r);
    Jet core{B_ * r * r - C_, 2.0 * B_ * r, 2.0 * B_};
    Jet p = sum(product(one_minus(sigma), core), product(sigma, well(r, true)));
    return product(outer_multiplier(r), p);
}

Jet HamiltonianModel::angular_amplitude(double r) const {
    Jet q = scaled(config_.mu, product(core_blend(r), Jet{r * r, 2.0 * r, 2.0}));
    return product(outer_multiplier(r), q);
}

double HamiltonianModel::value(Vec2 p, Stage stage) const {
    double r = p.norm();
    double cm = r > 0.0 ? std::cos(static_cast<double>(order_) * p.angle()) : 0.0;
    double sing = config_.mu * r * r * cm;
    switch (stage) {
        case Stage::Singular: return sing;
        case Stage::Gaussian: return sing + well(r, false).v;
        case Stage::Cutoff: return sing + well(r, true).v;
        case Stage::Core: {
            double e = outer_multiplier(r).v;
            return (radial_part(r).v + angular_amplitude(r).v * cm) / e;
        }
        case Stage::Full: return radial_part(r).v + angular_amplitude(r).v * cm;
    }
    return 0.0;
}

Vec2 HamiltonianModel::gradient(Vec2 p) const {
    double r = p.norm();
    if (r < config_.core_blend_lo * r_c_) {
        double s = 2.0 * config_.eps_scale * B_;
        return {s * p.x, s * p.y};
    }
    double th = p.angle();
    double M = static_cast<double>(order_);
    double cm = std::cos(M * th), sm = std::sin(M * th);
    Jet G = radial_part(r), K = angular_amplitude(r);
    double h_r = G.d1 + K.d1 * cm;
    double h_t = -M * K.v * sm;
    double c = p.x / r, s = p.y / r;
    return {c * h_r - s * h_t / r, s * h_r + c * h_t / r};
}

Hessian HamiltonianModel::hessian(Vec2 p) const {
    double r = p.norm();
    if (r < config_.core_blend_lo * r_c_) {
        double s = 2.0 * config_.eps_scale * B_;
        return {s, 0.0, s};
    }
    double th = p.angle();
    double M = static_cast<double>(order_);
    double cm = std::cos(M * th), sm = std::sin(M * th);
    Jet G = radial_part(r), K = angular_amplitude(r);
    double h_r = G.d1 + K.d1 * cm;
    double h_t = -M * K.v * sm;
    double h_rr_p = G.d2 + K.d2 * cm;
    double h_rt_p = -M * K.d1 * sm;
    double h_tt_p = -M * M * K.v * cm;
    // Covariant components in the orthonormal polar frame.
    double hrr = h_rr_p;
    double hrt = h_rt_p / r - h_t / (r * r);
    double htt = h_r / r + h_tt_p / (r * r);
    double c = p.x / r, s = p.y / r;
    return {c * c * hrr - 2.0 * c * s * hrt + s * s * htt,
            c * s * (hrr - htt) + (c * c - s * s) * hrt,
            s * s * hrr + 2.0 * c * s * hrt + c * c * htt};
}

Jet HamiltonianModel::density(double r) const {
    double ec = form_.eps_c, es = form_.eps_sym;
    if (r < sym_outer_radius()) {
        Jet s = smooth_ramp(r, core_radius(), sym_inner_radius());
        return {ec + (es - ec) * s.v, (es - ec) * s.d1, (es - ec) * s.d2};
    }
    Jet s = smooth_ramp(r, sym_outer_radius(), config_.r_sing);
    return {es + (1.0 - es) * s.v, (1.0 - es) * s.d1, (1.0 - es) * s.d2};
}

}  // namespace sutured::dynamics
