#include "sutured/dynamics/flow.hpp"

#include "sutured/dynamics/detail/controlled.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace sutured::dynamics {

FlowOptions FlowOptions::with_tolerance(double tol) {
    FlowOptions o;
    o.tol_abs = tol;
    o.tol_rel = tol;
    return o;
}


Vec2 integrate(const VectorField& field, Vec2 start, double duration, const FlowOptions& opts) {
    using State = std::array<double, 2>;
    auto system = [&field](const State& x, State& dx, double) {
        Vec2 v = field({x[0], x[1]});
        dx[0] = v.x;
        dx[1] = v.y;
    };
    State out = detail::run_controlled(system, State{start.x, start.y}, 0.0, duration, opts);
    return {out[0], out[1]};
}

TangentState integrate_tangent(const VectorField& field, const FieldJacobian& jacobian,
                               TangentState start, double duration, const FlowOptions& opts) {
    using State = std::array<double, 9>;
    auto system = [&](const State& x, State& dx, double) {
        Vec2 p{x[0], x[1]};
        Vec2 v = field(p);
        Mat2 D = jacobian(p);
        dx[0] = v.x;
        dx[1] = v.y;
        Mat2 J{x[2], x[3], x[4], x[5]};
        Mat2 dJ = D * J;
        dx[2] = dJ.a;
        dx[3] = dJ.b;
        dx[4] = dJ.c;
        dx[5] = dJ.d;
        Vec2 w{x[6], x[7]};
        Vec2 dw = D * w;
        dx[6] = dw.x;
        dx[7] = dw.y;
        dx[8] = cross(w, dw) / dot(w, w);
    };
    const auto& s = start;
    State x{s.point.x, s.point.y, s.jacobian.a, s.jacobian.b, s.jacobian.c, s.jacobian.d,
            s.tracked.x, s.tracked.y, s.winding};
    State out = detail::run_controlled(system, x, 0.0, duration, opts);
    TangentState r;
    r.point = {out[0], out[1]};
    r.jacobian = {out[2], out[3], out[4], out[5]};
    r.tracked = {out[6], out[7]};
    r.winding = out[8];
    // Keep the tracked vector at unit length; only its direction matters.
    double len = r.tracked.norm();
    if (len > 0.0) r.tracked = (1.0 / len) * r.tracked;
    return r;
}

Vec2 hamiltonian_field(const HamiltonianModel& model, Vec2 p) {
    Vec2 g = model.gradient(p);
    double rho = model.density(p.norm()).v;
    return {-g.y / rho, g.x / rho};
}

Mat2 hamiltonian_field_jacobian(const HamiltonianModel& model, Vec2 p) {
    Vec2 g = model.gradient(p);
    Hessian h = model.hessian(p);
    double r = p.norm();
    Jet rho = model.density(r);
    double inv = 1.0 / rho.v;
    Mat2 D{-h.xy * inv, -h.yy * inv, h.xx * inv, h.xy * inv};
    if (r > 0.0 && rho.d1 != 0.0) {
        double scale = -rho.d1 / (rho.v * rho.v * r);
        Vec2 grad_inv{scale * p.x, scale * p.y};
        Vec2 jg{-g.y, g.x};
        D.a += jg.x * grad_inv.x;
        D.b += jg.x * grad_inv.y;
        D.c += jg.y * grad_inv.x;
        D.d += jg.y * grad_inv.y;
    }
    return D;
}

Vec2 time1_flow(const HamiltonianModel& model, Vec2 p, const FlowOptions& opts) {
    return integrate([&model](Vec2 q) { return hamiltonian_field(model, q); }, p, 1.0, opts);
}

TangentState time1_flow(const HamiltonianModel& model, const TangentState& s, const FlowOptions& opts) {
    return integrate_tangent([&model](Vec2 q) { return hamiltonian_field(model, q); },
                             [&model](Vec2 q) { return hamiltonian_field_jacobian(model, q); },
                             s, 1.0, opts);
}

double glue_angle(std::int64_t k, std::int64_t l) {
    return -2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(k);
}

Vec2 glued_return_map(const HamiltonianModel& model, std::int64_t l, Vec2 p, const FlowOptions& opts) {
    return Mat2::rotation(glue_angle(model.k(), l)) * time1_flow(model, p, opts);
}

TangentState glued_return_map(const HamiltonianModel& model, std::int64_t l, const TangentState& s,
                              const FlowOptions& opts) {
    double alpha = glue_angle(model.k(), l);
    Mat2 R = Mat2::rotation(alpha);
    TangentState out = time1_flow(model, s, opts);
    out.point = R * out.point;
    out.jacobian = R * out.jacobian;
    out.tracked = R * out.tracked;
    out.winding += alpha;
    return out;
}

}  // namespace sutured::dynamics
