#pragma once

#include "sutured/dynamics/liouville.hpp"

#include <utility>
#include <vector>

namespace sutured::dynamics {

struct RegionSample {
    Region region;
    Vec2 point;
};

struct ExactnessSample {
    RegionSample sample;
    double f1 = 0.0;           // integral over [0,1] of (-H + beta(X)) along the trajectory
    double f1_expected = 0.0;  // C~ on the core, 0 elsewhere
    double pointwise = 0.0;    // beta(X) - H at the sample
    bool stayed_inside = true;
    bool integrated = true;  // false if the integrator gave up
};

struct ExactnessReport {
    std::vector<ExactnessSample> samples;
    double max_action_deviation = 0.0;
    double max_pointwise_deviation = 0.0;
    bool all_inside = true;
    bool all_integrated = true;

    bool passed(double tol_action = 1e-8, double tol_pointwise = 1e-10) const {
        return all_inside && all_integrated && max_action_deviation < tol_action && max_pointwise_deviation < tol_pointwise;
    }
};

// Deterministic samples whose unit-time trajectories stay inside their regions.
std::vector<RegionSample> default_region_samples(const ReebSystem& sys);

ExactnessReport verify_exactness(const ReebSystem& sys, const std::vector<RegionSample>& samples);

struct ClosedFormReport {
    std::vector<std::pair<RegionSample, double>> errors;  // relative endpoint error per sample
    double max_error = 0.0;
};

// Integrates each region's closed-form field for unit time and compares with the analytic flow.
ClosedFormReport closed_form_agreement(const ReebSystem& sys, const std::vector<RegionSample>& samples);

}  // namespace sutured::dynamics
