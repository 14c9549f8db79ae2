#pragma once

#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/setup.hpp"
#include "sutured/orbits/orbit_model.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sutured::dynamics {

// Measurement is inconsistent with a well-posed model (e.g. non-positive core rotation).
class DynamicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Monodromy {
    Mat2 matrix;
    double determinant = 1.0;
    std::complex<double> eig_major;
    std::complex<double> eig_minor;
    orbits::OrbitType type = orbits::OrbitType::Elliptic;
    double winding = 0.0;  // turning angle of the tracked eigendirection, radians
    std::int64_t steps = 0;  // glued return maps composed
};

// Classify a symplectic 2x2 matrix by its eigenvalues.
orbits::OrbitType classify(const Mat2& m);

// Simple saddle orbit gamma_i covered `multiplicity` times: |k| * multiplicity glued steps from
// saddle i, tracking its unstable direction.
Monodromy saddle_monodromy(const ReebSystem& sys, std::int64_t orbit_index, std::int64_t multiplicity);

// Central orbit covered t times: t glued steps at the origin.
Monodromy core_monodromy(const ReebSystem& sys, std::int64_t multiplicity);

Monodromy monodromy(const ReebSystem& sys, const orbits::ReebOrbit& orbit);

// Unstable eigenvalue predicted for a saddle orbit: exp(multiplicity |k| a / eps_sym).
double predicted_saddle_eigenvalue(const ReebSystem& sys, std::int64_t multiplicity);

struct RotationMeasurement {
    double rotation = 0.0;        // -l/k + delta_measured
    double delta_measured = 0.0;  // time-1 core turning angle / 2 pi
};

RotationMeasurement rotation_number(const ReebSystem& sys);

// max{m : m * delta < 1/|k|} for a floating delta.
std::int64_t horizon_for(double delta, std::int64_t abs_k);

struct NumericalCz {
    std::int64_t value = 0;
    double measured = 0.0;  // t * phi (elliptic) or the winding per period / pi (hyperbolic)
    bool ambiguous = false;
    std::string note;
};

NumericalCz numerical_cz(const ReebSystem& sys, const orbits::ReebOrbit& orbit,
                         double ambiguity_tol = 1e-6);

}  // namespace sutured::dynamics
