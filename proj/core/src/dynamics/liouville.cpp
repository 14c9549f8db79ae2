#include "sutured/dynamics/liouville.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sutured::dynamics {

namespace {

struct ExteriorPolar {
    double r;
    double theta;
    double phase;  // M theta
};

ExteriorPolar to_exterior(const HamiltonianModel& m, Vec2 p) {
    double th = p.angle();
    return {p.norm(), th, static_cast<double>(m.symmetry_order()) * th};
}

}  // namespace

std::string region_name(const Region& region) {
    if (std::holds_alternative<CoreRegion>(region)) return "core";
    if (const auto* s = std::get_if<SaddleRegion>(&region)) return "saddle(" + std::to_string(s->index) + ")";
    return "exterior";
}

bool in_region(const ReebSystem& sys, const Region& region, Vec2 p) {
    const auto& m = sys.model();
    if (std::holds_alternative<CoreRegion>(region)) return p.norm() <= m.core_radius();
    if (const auto* s = std::get_if<SaddleRegion>(&region)) return sys.chart(s->index).contains(p);
    return p.norm() >= m.exterior_radius();
}

Vec2 eval_Xh(const ReebSystem& sys, const Region& region, Vec2 p) {
    if (!in_region(sys, region, p)) {
        throw std::domain_error("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                ") lies outside the " + region_name(region) + " region");
    }
    return region_field(sys, region, p);
}

Vec2 region_field(const ReebSystem& sys, const Region& region, Vec2 p) {
    const auto& m = sys.model();
    const auto& form = m.form();
    if (std::holds_alternative<CoreRegion>(region)) {
        double w = 2.0 * m.B_tilde() / form.eps_c;
        return {-w * p.y, w * p.x};
    }
    if (const auto* s = std::get_if<SaddleRegion>(&region)) {
        const SaddleChart& c = sys.chart(s->index);
        Vec2 q = c.to_chart(p);
        Vec2 vq{-c.a * q.x / form.eps_sym, c.a * q.y / form.eps_sym};
        return c.frame * vq;
    }
    ExteriorPolar e = to_exterior(m, p);
    double M = static_cast<double>(m.symmetry_order());
    double radial = M * m.mu() * std::sin(e.phase);
    double angular = 2.0 * m.mu() * std::cos(e.phase);
    return {radial * p.x - angular * p.y, radial * p.y + angular * p.x};
}

double region_hamiltonian(const ReebSystem& sys, const Region& region, Vec2 p) {
    const auto& m = sys.model();
    if (std::holds_alternative<CoreRegion>(region)) {
        return m.B_tilde() * dot(p, p) - m.C_tilde();
    }
    if (const auto* s = std::get_if<SaddleRegion>(&region)) {
        const SaddleChart& c = sys.chart(s->index);
        Vec2 q = c.to_chart(p);
        return c.a * q.x * q.y;
    }
    ExteriorPolar e = to_exterior(m, p);
    return m.mu() * e.r * e.r * std::cos(e.phase);
}

double region_beta(const ReebSystem& sys, const Region& region, Vec2 p, Vec2 v) {
    const auto& form = sys.model().form();
    if (std::holds_alternative<CoreRegion>(region)) {
        return 0.5 * form.eps_c * cross(p, v);
    }
    if (const auto* s = std::get_if<SaddleRegion>(&region)) {
        const SaddleChart& c = sys.chart(s->index);
        Mat2 inv = c.frame.inverse();
        return 0.5 * form.eps_sym * cross(c.to_chart(p), inv * v);
    }
    return 0.5 * cross(p, v);
}

double region_density(const ReebSystem& sys, const Region& region) {
    const auto& form = sys.model().form();
    if (std::holds_alternative<CoreRegion>(region)) return form.eps_c;
    if (std::holds_alternative<SaddleRegion>(region)) return form.eps_sym;
    return 1.0;
}

Vec2 region_flow_exact(const ReebSystem& sys, const Region& region, Vec2 p, double t) {
    const auto& m = sys.model();
    const auto& form = m.form();
    if (std::holds_alternative<CoreRegion>(region)) {
        return Mat2::rotation(2.0 * m.B_tilde() / form.eps_c * t) * p;
    }
    if (const auto* s = std::get_if<SaddleRegion>(&region)) {
        const SaddleChart& c = sys.chart(s->index);
        Vec2 q = c.to_chart(p);
        double rate = c.a / form.eps_sym * t;
        return c.from_chart({q.x * std::exp(-rate), q.y * std::exp(rate)});
    }
    // Phase phi = M theta obeys phi' = 2 mu M cos(phi); H = mu r^2 cos(phi) is conserved.
    ExteriorPolar e = to_exterior(m, p);
    double M = static_cast<double>(m.symmetry_order());
    double speed = 2.0 * m.mu() * M * t;
    constexpr double pi = std::numbers::pi;
    double phi0 = std::remainder(e.phase, 2.0 * pi);  // (-pi, pi]
    double c0 = std::cos(phi0);
    double phi1 = phi0;
    double r1 = e.r;
    if (c0 == 0.0) {
        r1 = e.r * std::exp(M * m.mu() * std::sin(phi0) * t);
    } else {
        // With u = gd^{-1}(phase) on the branch of phi0, cos(phase) = sech(u) in magnitude.
        double shift = c0 > 0.0 ? 0.0 : (phi0 > 0.0 ? pi : -pi);
        double sign = c0 > 0.0 ? 1.0 : -1.0;
        double u0 = std::atanh(std::sin(phi0 - shift));
        double u1 = u0 + sign * speed;
        phi1 = std::atan(std::sinh(u1)) + shift;
        r1 = e.r * std::sqrt(std::abs(c0) * std::cosh(u1));
    }
    double theta1 = e.theta + (phi1 - phi0) / M;
    return polar(r1, theta1);
}

}  // namespace sutured::dynamics
