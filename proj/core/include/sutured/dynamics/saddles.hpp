#pragma once

#include "sutured/dynamics/flow.hpp"
#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/hamiltonian.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sutured::dynamics {

struct RootOptions {
    double tol_step = 1e-12;
    double tol_gradient = 1e-9;
    double tol_geom = 1e-9;
    int max_iterations = 50;
};

// Newton failed, a critical point is not a saddle, or the saddles break the cyclic symmetry.
class SaddleSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SaddlePoint {
    std::int64_t index = 0;  // 1-based, counterclockwise from angle pi/M
    Vec2 point;
    double gradient_norm = 0.0;
    double hessian_det = 0.0;
    int iterations = 0;
};

// One Newton-refined saddle per seed (r_c, (2j-1) pi / M), j = 1..M.
std::vector<SaddlePoint> find_saddles(const HamiltonianModel& model, const RootOptions& opts = {});

// Symmetry defect: max distance between R_{2 pi/M} p_j and p_{j+1}.
double symmetry_defect(const std::vector<SaddlePoint>& saddles, std::int64_t order);

// Expected image of saddle s (1-based) under the glued map: s - nl for k > 0, s + nl for k < 0.
std::int64_t expected_saddle_image(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t l);

// Cycle lengths of a permutation on 1..size given as image[s-1].
std::vector<std::int64_t> cycle_lengths(const std::vector<std::int64_t>& image);

struct PermutationReport {
    std::vector<std::int64_t> image;  // measured image of each saddle, 1-based
    std::vector<std::int64_t> cycles;
    double max_mismatch = 0.0;  // distance from glued image to the matched saddle
    bool matches_expected = false;
};

PermutationReport glued_permutation(const HamiltonianModel& model, std::int64_t l,
                                    const std::vector<SaddlePoint>& saddles,
                                    const FlowOptions& flow = {});

// Linear chart around a saddle with det(frame) = 1 in which H = a x y to second order.
struct SaddleChart {
    std::int64_t index = 0;
    Vec2 center;
    Mat2 frame;  // chart coordinates to plane offsets
    double a = 0.0;
    double radius = 0.0;  // validity radius in the plane

    Vec2 to_chart(Vec2 p) const { return frame.inverse() * (p - center); }
    Vec2 from_chart(Vec2 q) const { return center + frame * q; }
    bool contains(Vec2 p) const { return (p - center).norm() <= radius; }
};

std::vector<SaddleChart> build_charts(const HamiltonianModel& model,
                                      const std::vector<SaddlePoint>& saddles);

}  // namespace sutured::dynamics
