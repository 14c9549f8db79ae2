#include "sutured/dynamics/exactness.hpp"
#include "sutured/dynamics/setup.hpp"

#include <gtest/gtest.h>

using namespace sutured::dynamics;

namespace {

ReebSystem make_system(std::int64_t n, std::int64_t k, std::int64_t l) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.k = k;
    return ReebSystem(HamiltonianModel(cfg), l);
}

}  // namespace

TEST(Exactness, SamplesCoverEveryRegion) {
    auto sys = make_system(2, 3, 1);
    auto samples = default_region_samples(sys);
    std::size_t core = 0, saddle = 0, ext = 0;
    for (const auto& s : samples) {
        EXPECT_TRUE(in_region(sys, s.region, s.point)) << region_name(s.region);
        if (std::holds_alternative<CoreRegion>(s.region)) ++core;
        if (std::holds_alternative<SaddleRegion>(s.region)) ++saddle;
        if (std::holds_alternative<ExteriorRegion>(s.region)) ++ext;
    }
    EXPECT_GT(core, 0U);
    EXPECT_EQ(saddle, 2U * 6U);
    EXPECT_GT(ext, 0U);
}

TEST(Exactness, ActionFunctionValues) {
    auto sys = make_system(1, 3, 1);
    auto rep = verify_exactness(sys, default_region_samples(sys));
    EXPECT_TRUE(rep.passed());
    for (const auto& s : rep.samples) {
        EXPECT_TRUE(s.stayed_inside);
        if (std::holds_alternative<CoreRegion>(s.sample.region)) {
            EXPECT_NEAR(s.f1, sys.model().C_tilde(), 1e-8);
        } else {
            EXPECT_NEAR(s.f1, 0.0, 1e-8);
        }
        EXPECT_LT(std::abs(s.pointwise - s.f1_expected), 1e-10);
    }
}

TEST(Exactness, FailsWhenTrajectoryLeavesRegion) {
    auto sys = make_system(1, 3, 1);
    // A saddle-chart point on the unstable axis at the chart edge leaves within unit time.
    const auto& c = sys.chart(1);
    Vec2 edge = c.center + (0.95 * c.radius / (c.frame * Vec2{0.0, 1.0}).norm()) * (c.frame * Vec2{0.0, 1.0});
    auto rep = verify_exactness(sys, {RegionSample{SaddleRegion{1}, edge}});
    EXPECT_FALSE(rep.all_inside);
    EXPECT_FALSE(rep.passed());
}

TEST(ClosedForm, AgreesAtDefaultTolerance) {
    auto sys = make_system(1, 3, 1);
    auto rep = closed_form_agreement(sys, default_region_samples(sys));
    EXPECT_LE(rep.max_error, 1e-9);
}

TEST(ClosedForm, LooseToleranceIsDetected) {
    auto sys = make_system(1, 3, 1).with_flow(FlowOptions::with_tolerance(1e-2));
    auto rep = closed_form_agreement(sys, default_region_samples(sys));
    EXPECT_GT(rep.max_error, 1e-9);
}
