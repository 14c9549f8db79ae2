#pragma once

#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/setup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sutured::dynamics {

struct FixedPointOptions {
    int grid = 0;           // samples per axis; 0 picks enough to separate neighbouring saddles
    double radius = 0.0;    // 0 selects Rcut
    double newton_tol = 1e-10;
    int max_iterations = 40;
    double match_tol = 1e-6;
};

struct FixedPoint {
    std::int64_t period = 0;  // j with F^j(x) = x
    Vec2 point;
    double residual = 0.0;
    std::string label;  // "origin", "saddle <i>", or "spurious"
};

struct FixedPointReport {
    std::vector<FixedPoint> found;
    std::vector<FixedPoint> spurious;
    std::size_t samples = 0;
    std::size_t escaped = 0;           // samples whose iterates the integrator could not follow
    std::size_t candidates = 0;        // grid-local minima of the Newton step length
    std::size_t unconverged = 0;       // candidates where Newton did not reach a fixed point
    bool origin_every_period = false;  // origin found for every j = 1..|k|
    bool all_saddles_at_k = false;     // every saddle found with period |k|

    bool ok() const { return spurious.empty() && origin_every_period && all_saddles_at_k; }
};

// Fixed points of F, F^2, ..., F^|k| inside the disk, where F is the glued return map.
FixedPointReport fixed_point_inventory(const ReebSystem& sys, const FixedPointOptions& opts = {});

}  // namespace sutured::dynamics
