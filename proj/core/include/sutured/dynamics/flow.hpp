#pragma once

#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/hamiltonian.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace sutured::dynamics {

struct FlowOptions {
    double tol_abs = 1e-10;
    double tol_rel = 1e-10;
    double dt_initial = 1e-2;
    double dt_min = 1e-14;
    std::size_t max_steps = 200'000;

    static FlowOptions with_tolerance(double tol);
};

// Step-size underflow or step budget exhausted.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point carried with its linearization, one tracked tangent vector, and that vector's
// accumulated turning angle in radians.
struct TangentState {
    Vec2 point;
    Mat2 jacobian = Mat2::identity();
    Vec2 tracked{1.0, 0.0};
    double winding = 0.0;
};

using VectorField = std::function<Vec2(Vec2)>;
using FieldJacobian = std::function<Mat2(Vec2)>;

Vec2 integrate(const VectorField& field, Vec2 start, double duration, const FlowOptions& opts);
TangentState integrate_tangent(const VectorField& field, const FieldJacobian& jacobian,
                               TangentState start, double duration, const FlowOptions& opts);

// X = (1/rho) (-H_y, H_x): the Hamiltonian field of H for the area form rho dx ^ dy.
Vec2 hamiltonian_field(const HamiltonianModel& model, Vec2 p);
Mat2 hamiltonian_field_jacobian(const HamiltonianModel& model, Vec2 p);

Vec2 time1_flow(const HamiltonianModel& model, Vec2 p, const FlowOptions& opts = {});
TangentState time1_flow(const HamiltonianModel& model, const TangentState& s,
                        const FlowOptions& opts = {});

// Rotation angle -2 pi l / k applied after the time-1 flow.
double glue_angle(std::int64_t k, std::int64_t l);

Vec2 glued_return_map(const HamiltonianModel& model, std::int64_t l, Vec2 p,
                      const FlowOptions& opts = {});
TangentState glued_return_map(const HamiltonianModel& model, std::int64_t l, const TangentState& s,
                              const FlowOptions& opts = {});

}  // namespace sutured::dynamics
