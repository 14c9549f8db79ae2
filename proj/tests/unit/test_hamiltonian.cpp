#include "sutured/dynamics/flow.hpp"
#include "sutured/dynamics/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sutured::dynamics;

namespace {

HamiltonianModel make_model(std::int64_t n, std::int64_t k) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.k = k;
    return HamiltonianModel(cfg);
}

// Central differences with a step scaled to the point.
Vec2 fd_gradient(const HamiltonianModel& m, Vec2 p, double h) {
    return {(m.value({p.x + h, p.y}) - m.value({p.x - h, p.y})) / (2 * h),
            (m.value({p.x, p.y + h}) - m.value({p.x, p.y - h})) / (2 * h)};
}

}  // namespace

TEST(SmoothRamp, EndpointsAndMonotone) {
    EXPECT_EQ(smooth_ramp(-1.0, 0.0, 1.0).v, 0.0);
    EXPECT_EQ(smooth_ramp(2.0, 0.0, 1.0).v, 1.0);
    EXPECT_NEAR(smooth_ramp(0.5, 0.0, 1.0).v, 0.5, 1e-15);
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        Jet j = smooth_ramp(i / 100.0, 0.0, 1.0);
        EXPECT_GE(j.v, prev);
        EXPECT_GE(j.d1, 0.0);
        prev = j.v;
    }
    // First and second derivatives vanish at both ends.
    for (double r : {0.0, 1.0}) {
        Jet j = smooth_ramp(r, 0.0, 1.0);
        EXPECT_NEAR(j.d1, 0.0, 1e-12);
        EXPECT_NEAR(j.d2, 0.0, 1e-12);
    }
}

TEST(SmoothRamp, DerivativesMatchDifferences) {
    const double h = 1e-6;
    for (double r = 0.31; r < 0.9; r += 0.07) {
        Jet j = smooth_ramp(r, 0.3, 0.9);
        EXPECT_NEAR(j.d1, (smooth_ramp(r + h, 0.3, 0.9).v - smooth_ramp(r - h, 0.3, 0.9).v) / (2 * h), 1e-7);
        EXPECT_NEAR(j.d2, (smooth_ramp(r + h, 0.3, 0.9).d1 - smooth_ramp(r - h, 0.3, 0.9).d1) / (2 * h), 1e-6);
    }
}

TEST(HamiltonianModel, RejectsInvalidConstants) {
    ModelConfig cfg;
    cfg.amplitude = 0.01;  // m A = 0.5 < mu
    EXPECT_THROW(HamiltonianModel{cfg}, InvalidModel);
    ModelConfig tight;
    tight.r_sing = 0.1;  // below the critical radius
    EXPECT_THROW(HamiltonianModel{tight}, InvalidModel);
    ModelConfig neg;
    neg.delta = -0.01;
    EXPECT_THROW(HamiltonianModel{neg}, InvalidModel);
    PiecewiseLiouville form;
    form.eps_c = 0.05;  // not << eps_sym
    EXPECT_THROW(HamiltonianModel(ModelConfig{}, form), InvalidModel);
}

TEST(HamiltonianModel, CriticalRadius) {
    auto m = make_model(1, 3);
    double expected = std::sqrt(std::log(m.config().m_gauss * m.amplitude() / m.mu()) / m.config().m_gauss);
    EXPECT_NEAR(m.critical_radius(), expected, 1e-15);
    EXPECT_NEAR(m.critical_radius(), std::sqrt(1.0 / 50.0), 1e-12);
}

TEST(HamiltonianModel, AgreesWithSingularModelFarOut) {
    auto m = make_model(1, 3);
    double r = 3.0 * m.config().r_cut;
    EXPECT_NEAR(m.value(polar(r, 0.0)), m.mu() * r * r, 1e-12 * r * r);
    EXPECT_NEAR(m.value(polar(r, 0.3)), m.mu() * r * r * std::cos(0.9), 1e-12 * r * r);
}

TEST(HamiltonianModel, GaussianStageVanishesOnCriticalPoints) {
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{1, 3}, {2, -2}, {1, 5}}) {
        auto m = make_model(n, k);
        double M = static_cast<double>(m.symmetry_order());
        for (int j = 0; j < m.symmetry_order(); ++j) {
            Vec2 p = polar(m.critical_radius(), (2 * j + 1) * std::numbers::pi / M);
            EXPECT_NEAR(m.value(p, Stage::Gaussian), 0.0, 1e-14);
        }
    }
}

TEST(HamiltonianModel, OriginValue) {
    auto m = make_model(1, 3);
    EXPECT_NEAR(m.value({0.0, 0.0}), -m.eps() * m.C(), 1e-18);
    EXPECT_NEAR(m.C_tilde(), m.eps() * m.C(), 1e-18);
    // Inside the core the function is exactly the core quadratic.
    Vec2 p = polar(0.9 * m.core_radius(), 1.1);
    EXPECT_NEAR(m.value(p), m.B_tilde() * dot(p, p) - m.C_tilde(), 1e-16);
}

TEST(HamiltonianModel, CoreRotationSetsDelta) {
    auto m = make_model(1, 3);
    EXPECT_NEAR(m.B_tilde() / (std::numbers::pi * m.form().eps_c), m.delta(), 1e-15);
}

TEST(HamiltonianModel, GradientMatchesFiniteDifferences) {
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{1, 3}, {2, -2}, {1, 5}}) {
        auto m = make_model(n, k);
        std::mt19937 gen(5);
        std::uniform_real_distribution<double> rad(0.0, 2.5 * m.config().r_cut);
        std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
        for (int i = 0; i < 200; ++i) {
            Vec2 p = polar(rad(gen), ang(gen));
            double h = 1e-6 * std::max(1e-2, p.norm());
            Vec2 g = m.gradient(p);
            Vec2 fd = fd_gradient(m, p, h);
            double scale = std::max(1e-6, g.norm());
            EXPECT_LT((g - fd).norm() / scale, 1e-5) << p.x << "," << p.y;
        }
    }
}

TEST(HamiltonianModel, HessianMatchesFiniteDifferences) {
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{1, 3}, {2, 3}}) {
        auto m = make_model(n, k);
        std::mt19937 gen(6);
        std::uniform_real_distribution<double> rad(0.0, 2.5 * m.config().r_cut);
        std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
        for (int i = 0; i < 200; ++i) {
            Vec2 p = polar(rad(gen), ang(gen));
            double h = 1e-6 * std::max(1e-2, p.norm());
            Hessian H = m.hessian(p);
            Vec2 gx = (1.0 / (2 * h)) * (m.gradient({p.x + h, p.y}) - m.gradient({p.x - h, p.y}));
            Vec2 gy = (1.0 / (2 * h)) * (m.gradient({p.x, p.y + h}) - m.gradient({p.x, p.y - h}));
            double scale = std::max({1e-4, std::abs(H.xx), std::abs(H.xy), std::abs(H.yy)});
            EXPECT_LT(std::abs(H.xx - gx.x) / scale, 1e-5);
            EXPECT_LT(std::abs(H.xy - gx.y) / scale, 1e-5);
            EXPECT_LT(std::abs(H.xy - gy.x) / scale, 1e-5);
            EXPECT_LT(std::abs(H.yy - gy.y) / scale, 1e-5);
        }
    }
}

TEST(HamiltonianModel, RotationSymmetry) {
    auto m = make_model(2, 3);
    double step = 2.0 * std::numbers::pi / static_cast<double>(m.symmetry_order());
    std::mt19937 gen(8);
    std::uniform_real_distribution<double> rad(0.0, 3.0 * m.config().r_cut);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 200; ++i) {
        Vec2 p = polar(rad(gen), ang(gen));
        Vec2 q = Mat2::rotation(step) * p;
        EXPECT_NEAR(m.value(p), m.value(q), 1e-13 * std::max(1.0, dot(p, p)));
    }
}

TEST(HamiltonianModel, DensityProfile) {
    auto m = make_model(1, 3);
    EXPECT_EQ(m.density(0.5 * m.core_radius()).v, m.form().eps_c);
    EXPECT_EQ(m.density(0.5 * (m.sym_inner_radius() + m.sym_outer_radius())).v, m.form().eps_sym);
    EXPECT_EQ(m.density(1.01 * m.config().r_sing).v, 1.0);
    EXPECT_LT(m.core_radius(), m.sym_inner_radius());
    EXPECT_LT(m.sym_inner_radius(), m.critical_radius());
    EXPECT_GT(m.sym_outer_radius(), m.critical_radius());
}

TEST(GlobalField, AreaFormIdentity) {
    // rho * (X x v) = -dH(v): X is the Hamiltonian field of H for rho dx ^ dy.
    auto m = make_model(1, 3);
    std::mt19937 gen(9);
    std::uniform_real_distribution<double> rad(0.0, 2.0 * m.config().r_cut);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        Vec2 p = polar(rad(gen), ang(gen));
        Vec2 X = hamiltonian_field(m, p);
        double rho = m.density(p.norm()).v;
        double h = 1e-6 * std::max(1e-2, p.norm());
        Vec2 fd = fd_gradient(m, p, h);
        double scale = std::max(1e-8, fd.norm());
        EXPECT_LT(std::abs(rho * cross(X, {1.0, 0.0}) + fd.x) / scale, 1e-5);
        EXPECT_LT(std::abs(rho * cross(X, {0.0, 1.0}) + fd.y) / scale, 1e-5);
    }
}

TEST(GlobalField, JacobianMatchesFiniteDifferences) {
    auto m = make_model(1, 3);
    std::mt19937 gen(10);
    std::uniform_real_distribution<double> rad(0.0, 2.0 * m.config().r_cut);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        Vec2 p = polar(rad(gen), ang(gen));
        double h = 1e-7 * std::max(1e-2, p.norm());
        Mat2 J = hamiltonian_field_jacobian(m, p);
        Vec2 cx = (1.0 / (2 * h)) * (hamiltonian_field(m, {p.x + h, p.y}) - hamiltonian_field(m, {p.x - h, p.y}));
        Vec2 cy = (1.0 / (2 * h)) * (hamiltonian_field(m, {p.x, p.y + h}) - hamiltonian_field(m, {p.x, p.y - h}));
        double scale = std::max(1e-6, max_abs_entry(J));
        EXPECT_LT(std::abs(J.a - cx.x) / scale, 1e-5);
        EXPECT_LT(std::abs(J.c - cx.y) / scale, 1e-5);
        EXPECT_LT(std::abs(J.b - cy.x) / scale, 1e-5);
        EXPECT_LT(std::abs(J.d - cy.y) / scale, 1e-5);
    }
}
