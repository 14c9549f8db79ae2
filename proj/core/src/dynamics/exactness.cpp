#include "sutured/dynamics/exactness.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "sutured/dynamics/detail/controlled.hpp"

namespace sutured::dynamics {

std::vector<RegionSample> default_region_samples(const ReebSystem& sys) {
    const auto& m = sys.model();
    constexpr double pi = std::numbers::pi;
    std::vector<RegionSample> out;
    const double rc = m.critical_radius();
    for (int i = 0; i < 4; ++i) {
        double r = m.core_radius() * (0.2 + 0.2 * i);
        out.push_back({CoreRegion{}, polar(r, 0.3 + 1.7 * i)});
    }
    for (const auto& chart : sys.charts()) {
        for (int i = 0; i < 2; ++i) {
            // Mostly along the stable axis so the unstable growth stays inside the chart.
            Vec2 q{1.0 - 0.3 * i, 0.2 + 0.3 * i};
            double scale = 0.1 * rc / (chart.frame * q).norm();
            out.push_back({SaddleRegion{chart.index}, chart.from_chart(scale * q)});
        }
    }
    const double M = static_cast<double>(m.symmetry_order());
    // Phases with sin(M theta) >= 0 move monotonically outward.
    const std::array<double, 4> phases{0.0, 0.4, 2.2, pi};
    for (double ph : phases) {
        out.push_back({ExteriorRegion{}, polar(1.5 * m.exterior_radius(), ph / M)});
    }
    return out;
}

namespace {

constexpr int kSubIntervals = 16;

}  // namespace

ExactnessReport verify_exactness(const ReebSystem& sys, const std::vector<RegionSample>& samples) {
    using State = std::array<double, 3>;
    ExactnessReport rep;
    const auto& opts = sys.flow();
    for (const auto& smp : samples) {
        const Region region = smp.region;
        auto system = [&](const State& x, State& dx, double) {
            Vec2 p{x[0], x[1]};
            Vec2 v = region_field(sys, region, p);
            dx[0] = v.x;
            dx[1] = v.y;
            dx[2] = -region_hamiltonian(sys, region, p) + region_beta(sys, region, p, v);
        };
        ExactnessSample es;
        es.sample = smp;
        es.f1_expected = std::holds_alternative<CoreRegion>(region) ? sys.model().C_tilde() : 0.0;
        Vec2 v0 = region_field(sys, region, smp.point);
        es.pointwise = region_beta(sys, region, smp.point, v0) - region_hamiltonian(sys, region, smp.point);
        es.stayed_inside = in_region(sys, region, smp.point);

        State x{smp.point.x, smp.point.y, 0.0};
        const double dt_obs = 1.0 / kSubIntervals;
        try {
            for (int i = 0; i < kSubIntervals; ++i) {
                x = detail::run_controlled(system, x, i * dt_obs, (i + 1) * dt_obs, opts);
                if (!in_region(sys, region, {x[0], x[1]})) es.stayed_inside = false;
            }
            es.f1 = x[2];
        } catch (const IntegrationError&) {
            es.integrated = false;
            es.f1 = std::numeric_limits<double>::quiet_NaN();
        }

        double dev = es.integrated ? std::abs(es.f1 - es.f1_expected) : std::numeric_limits<double>::infinity();
        rep.max_action_deviation = std::max(rep.max_action_deviation, dev);
        rep.all_integrated = rep.all_integrated && es.integrated;
        rep.max_pointwise_deviation =
            std::max(rep.max_pointwise_deviation, std::abs(es.pointwise - es.f1_expected));
        rep.all_inside = rep.all_inside && es.stayed_inside;
        rep.samples.push_back(es);
    }
    return rep;
}

ClosedFormReport closed_form_agreement(const ReebSystem& sys, const std::vector<RegionSample>& samples) {
    ClosedFormReport rep;
    for (const auto& smp : samples) {
        const Region region = smp.region;
        double err = std::numeric_limits<double>::infinity();
        try {
            Vec2 numeric = integrate([&](Vec2 p) { return region_field(sys, region, p); }, smp.point, 1.0,
                                     sys.flow());
            Vec2 exact = region_flow_exact(sys, region, smp.point, 1.0);
            err = (numeric - exact).norm() / std::max(1.0, exact.norm());
        } catch (const IntegrationError&) {
        }
        rep.errors.emplace_back(smp, err);
        rep.max_error = std::max(rep.max_error, err);
    }
    return rep;
}

}  // namespace sutured::dynamics
