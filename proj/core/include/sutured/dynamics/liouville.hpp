#pragma once

#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/setup.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace sutured::dynamics {

// Disk around the origin where H = B~ r^2 - C~ and d(beta) = eps_c dx ^ dy.
struct CoreRegion {};
// Chart around saddle `index` where H = a x y and d(beta) = eps_sym dx ^ dy.
struct SaddleRegion {
    std::int64_t index = 1;
};
// Outside radius 2 Rcut, where H = mu r^2 cos(M theta) and d(beta) = dx ^ dy.
struct ExteriorRegion {};

using Region = std::variant<CoreRegion, SaddleRegion, ExteriorRegion>;

std::string region_name(const Region& region);

bool in_region(const ReebSystem& sys, const Region& region, Vec2 p);

// Closed-form Hamiltonian field on a region. Throws std::domain_error outside it.
Vec2 eval_Xh(const ReebSystem& sys, const Region& region, Vec2 p);

// Same formulas without the domain check, for integrating trajectories.
Vec2 region_field(const ReebSystem& sys, const Region& region, Vec2 p);
// Region normal form of H.
double region_hamiltonian(const ReebSystem& sys, const Region& region, Vec2 p);
// beta_p(v) for the region primitive.
double region_beta(const ReebSystem& sys, const Region& region, Vec2 p, Vec2 v);
// rho with d(beta) = rho dx ^ dy on the region, in plane coordinates.
double region_density(const ReebSystem& sys, const Region& region);

// Analytic time-t flow of the region field.
Vec2 region_flow_exact(const ReebSystem& sys, const Region& region, Vec2 p, double t);

}  // namespace sutured::dynamics
