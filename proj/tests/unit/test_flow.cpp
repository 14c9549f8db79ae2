#include "sutured/dynamics/flow.hpp"
#include "sutured/dynamics/liouville.hpp"
#include "sutured/dynamics/setup.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sutured::dynamics;

namespace {

ReebSystem make_system(std::int64_t n, std::int64_t k, std::int64_t l) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.k = k;
    return ReebSystem(HamiltonianModel(cfg), l);
}

}  // namespace

TEST(Integrate, LinearOscillator) {
    VectorField f = [](Vec2 p) { return Vec2{-p.y, p.x}; };
    Vec2 end = integrate(f, {1.0, 0.0}, std::numbers::pi / 2, {});
    EXPECT_NEAR(end.x, 0.0, 1e-9);
    EXPECT_NEAR(end.y, 1.0, 1e-9);
}

TEST(Integrate, TangentWindingOfRotation) {
    VectorField f = [](Vec2 p) { return Vec2{-p.y, p.x}; };
    FieldJacobian J = [](Vec2) { return Mat2{0.0, -1.0, 1.0, 0.0}; };
    TangentState s;
    s.point = {0.5, 0.0};
    auto out = integrate_tangent(f, J, s, 3.0, {});
    EXPECT_NEAR(out.winding, 3.0, 1e-9);
    EXPECT_NEAR(out.jacobian.det(), 1.0, 1e-9);
}

TEST(Integrate, StepBudgetRaises) {
    VectorField f = [](Vec2 p) { return Vec2{-p.y, p.x}; };
    FlowOptions opts;
    opts.max_steps = 3;
    opts.dt_initial = 1e-4;
    EXPECT_THROW(integrate(f, {1.0, 0.0}, 10.0, opts), IntegrationError);
}

TEST(Time1Flow, CoreRotation) {
    auto sys = make_system(1, 3, 1);
    const auto& m = sys.model();
    Vec2 p = polar(0.5 * m.core_radius(), 0.4);
    Vec2 q = time1_flow(m, p);
    double advance = 2.0 * m.B_tilde() / m.form().eps_c;
    EXPECT_NEAR(q.norm(), p.norm(), 1e-12);
    EXPECT_NEAR(std::remainder(q.angle() - p.angle() - advance, 2 * std::numbers::pi), 0.0, 1e-9);
}

TEST(Time1Flow, SaddleChartContraction) {
    auto sys = make_system(1, 3, 1);
    const auto& chart = sys.chart(1);
    double x = 0.002;
    Vec2 end = time1_flow(sys.model(), chart.from_chart({x, 0.0}));
    Vec2 q = chart.to_chart(end);
    double rate = chart.a / sys.model().form().eps_sym;
    // The global field is only second-order close to the chart model away from the saddle.
    EXPECT_NEAR(q.x, x * std::exp(-rate), 1e-3 * x);
    EXPECT_NEAR(q.y, 0.0, 1e-3 * x);
    // The closed-form chart field reproduces it exactly.
    Vec2 exact = region_flow_exact(sys, SaddleRegion{1}, chart.from_chart({x, 0.0}), 1.0);
    EXPECT_NEAR(chart.to_chart(exact).x, x * std::exp(-rate), 1e-15);
}

TEST(Time1Flow, PreservesAreaForm) {
    auto sys = make_system(1, 3, 1);
    const auto& m = sys.model();
    for (double r : {0.3, 0.8, 1.0, 1.3, 2.0}) {
        for (double th : {0.1, 1.7, 4.0}) {
            TangentState s;
            s.point = polar(r * m.critical_radius(), th);
            auto out = time1_flow(m, s);
            double ratio = m.density(out.point.norm()).v / m.density(s.point.norm()).v;
            EXPECT_NEAR(out.jacobian.det() * ratio, 1.0, 1e-8) << r << " " << th;
        }
    }
}

TEST(Time1Flow, TighterToleranceConverges) {
    auto sys = make_system(1, 3, 1);
    const auto& m = sys.model();
    Vec2 p = polar(1.2 * m.critical_radius(), 0.3);
    Vec2 coarse = time1_flow(m, p, FlowOptions::with_tolerance(1e-8));
    Vec2 fine = time1_flow(m, p, FlowOptions::with_tolerance(1e-10));
    Vec2 finer = time1_flow(m, p, FlowOptions::with_tolerance(1e-12));
    EXPECT_LT((fine - finer).norm(), 1e-8);
    EXPECT_LE((fine - finer).norm(), (coarse - finer).norm() + 1e-14);
}

TEST(Time1Flow, Deterministic) {
    auto sys = make_system(2, -2, 1);
    Vec2 p = polar(0.9 * sys.model().critical_radius(), 2.0);
    EXPECT_EQ(time1_flow(sys.model(), p), time1_flow(sys.model(), p));
}

TEST(GluedReturnMap, ComposesRotation) {
    auto sys = make_system(1, 3, 1);
    Vec2 p = polar(0.7 * sys.model().critical_radius(), 0.2);
    Vec2 a = glued_return_map(sys.model(), 1, p);
    Vec2 b = Mat2::rotation(-2.0 * std::numbers::pi / 3.0) * time1_flow(sys.model(), p);
    EXPECT_NEAR((a - b).norm(), 0.0, 1e-15);
    EXPECT_NEAR(glue_angle(-5, 2), 4.0 * std::numbers::pi / 5.0, 1e-15);
}

TEST(RegionFields, ClosedFormExamples) {
    auto sys = make_system(1, 3, 1);
    const auto& m = sys.model();
    const auto& chart = sys.chart(1);
    double a = chart.a;
    Vec2 v = chart.frame.inverse() * eval_Xh(sys, SaddleRegion{1}, chart.from_chart({0.01, 0.0}));
    EXPECT_NEAR(v.x, -a * 0.01 / m.form().eps_sym, 1e-15);
    EXPECT_NEAR(v.y, 0.0, 1e-15);

    Vec2 p = polar(0.5 * m.core_radius(), 1.0);
    Vec2 X = eval_Xh(sys, CoreRegion{}, p);
    EXPECT_NEAR(dot(X, p), 0.0, 1e-18);
    EXPECT_NEAR(cross(p, X) / dot(p, p), 2.0 * m.B_tilde() / m.form().eps_c, 1e-12);

    double r = 1.5 * m.exterior_radius();
    Vec2 e = eval_Xh(sys, ExteriorRegion{}, polar(r, 0.0));
    EXPECT_NEAR(e.x, 0.0, 1e-14);
    EXPECT_NEAR(e.y / r, 2.0 * m.mu(), 1e-14);

    EXPECT_THROW(eval_Xh(sys, CoreRegion{}, polar(m.critical_radius(), 0.0)), std::domain_error);
    EXPECT_THROW(eval_Xh(sys, ExteriorRegion{}, {0.0, 0.0}), std::domain_error);
}

TEST(RegionFields, InteriorProductIdentity) {
    // i_X d(beta) = -dH on each region, checked with differences of the region Hamiltonian.
    auto sys = make_system(1, 3, 1);
    const auto& m = sys.model();
    const auto& chart = sys.chart(2);
    std::vector<std::pair<Region, Vec2>> pts = {
        {CoreRegion{}, polar(0.3 * m.core_radius(), 0.5)},
        {CoreRegion{}, polar(0.9 * m.core_radius(), 2.5)},
        {SaddleRegion{2}, chart.from_chart({0.003, -0.002})},
        {SaddleRegion{2}, chart.from_chart({-0.001, 0.004})},
        {ExteriorRegion{}, polar(1.2 * m.exterior_radius(), 0.3)},
        {ExteriorRegion{}, polar(2.0 * m.exterior_radius(), -2.0)},
    };
    for (const auto& [region, p] : pts) {
        ASSERT_TRUE(in_region(sys, region, p)) << region_name(region);
        Vec2 X = eval_Xh(sys, region, p);
        double rho = region_density(sys, region);
        double h = 1e-7 * std::max(1e-2, p.norm());
        double hx = (region_hamiltonian(sys, region, {p.x + h, p.y}) - region_hamiltonian(sys, region, {p.x - h, p.y})) / (2 * h);
        double hy = (region_hamiltonian(sys, region, {p.x, p.y + h}) - region_hamiltonian(sys, region, {p.x, p.y - h})) / (2 * h);
        double scale = std::max(1e-10, std::hypot(hx, hy));
        EXPECT_LT(std::abs(rho * cross(X, {1.0, 0.0}) + hx) / scale, 1e-6) << region_name(region);
        EXPECT_LT(std::abs(rho * cross(X, {0.0, 1.0}) + hy) / scale, 1e-6) << region_name(region);
        // Region Hamiltonian agrees with the global one.
        EXPECT_NEAR(region_hamiltonian(sys, region, p), m.value(p),
                    (std::holds_alternative<SaddleRegion>(region) ? 1e-3 : 1e-12) * std::max(1e-6, std::abs(m.value(p))));
    }
}

TEST(RegionFields, LiouvillePairing) {
    auto sys = make_system(2, 3, 1);
    const auto& m = sys.model();
    Vec2 core = polar(0.6 * m.core_radius(), 0.2);
    Vec2 ext = polar(1.3 * m.exterior_radius(), 0.9);
    Vec2 sad = sys.chart(3).from_chart({0.002, 0.003});
    auto residual = [&](const Region& r, Vec2 p) {
        return region_beta(sys, r, p, eval_Xh(sys, r, p)) - region_hamiltonian(sys, r, p);
    };
    EXPECT_NEAR(residual(CoreRegion{}, core), m.C_tilde(), 1e-15);
    EXPECT_NEAR(residual(ExteriorRegion{}, ext), 0.0, 1e-12);
    EXPECT_NEAR(residual(SaddleRegion{3}, sad), 0.0, 1e-15);
}
