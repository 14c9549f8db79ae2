#include "sutured/dynamics/monodromy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sutured::dynamics {

namespace {

std::int64_t abs_k(const ReebSystem& sys) {
    return sys.model().k() < 0 ? -sys.model().k() : sys.model().k();
}

Monodromy finish(const TangentState& s, std::int64_t steps) {
    Monodromy m;
    m.matrix = s.jacobian;
    m.determinant = s.jacobian.det();
    auto [e1, e2] = eigenvalues(s.jacobian);
    m.eig_major = e1;
    m.eig_minor = e2;
    m.type = classify(s.jacobian);
    m.winding = s.winding;
    m.steps = steps;
    return m;
}

}  // namespace

orbits::OrbitType classify(const Mat2& m) {
    auto [e1, e2] = eigenvalues(m);
    if (e1.imag() != 0.0) return orbits::OrbitType::Elliptic;
    return e1.real() > 0.0 ? orbits::OrbitType::PositiveHyperbolic : orbits::OrbitType::NegativeHyperbolic;
}

Monodromy saddle_monodromy(const ReebSystem& sys, std::int64_t orbit_index, std::int64_t multiplicity) {
    if (orbit_index < 1 || orbit_index > sys.model().n()) {
        throw std::invalid_argument("saddle orbit index must lie in 1..n");
    }
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
    const SaddleChart& chart = sys.chart(orbit_index);
    TangentState s;
    s.point = chart.center;
    Vec2 unstable = chart.frame * Vec2{0.0, 1.0};
    s.tracked = (1.0 / unstable.norm()) * unstable;
    std::int64_t steps = abs_k(sys) * multiplicity;
    for (std::int64_t i = 0; i < steps; ++i) {
        s = glued_return_map(sys.model(), sys.l(), s, sys.flow());
    }
    return finish(s, steps);
}

Monodromy core_monodromy(const ReebSystem& sys, std::int64_t multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
    TangentState s;
    for (std::int64_t i = 0; i < multiplicity; ++i) {
        s = glued_return_map(sys.model(), sys.l(), s, sys.flow());
    }
    return finish(s, multiplicity);
}

Monodromy monodromy(const ReebSystem& sys, const orbits::ReebOrbit& orbit) {
    if (orbit.is_central()) return core_monodromy(sys, orbit.multiplicity);
    return saddle_monodromy(sys, orbit.saddle_index, orbit.multiplicity);
}

double predicted_saddle_eigenvalue(const ReebSystem& sys, std::int64_t multiplicity) {
    const auto& m = sys.model();
    return std::exp(static_cast<double>(multiplicity * abs_k(sys)) * m.saddle_coefficient() /
                    m.form().eps_sym);
}

RotationMeasurement rotation_number(const ReebSystem& sys) {
    TangentState s;
    s = time1_flow(sys.model(), s, sys.flow());
    RotationMeasurement r;
    r.delta_measured = s.winding / (2.0 * std::numbers::pi);
    if (!(r.delta_measured > 0.0)) {
        std::ostringstream os;
        os << "core rotation offset " << r.delta_measured << " is not positive";
        throw DynamicsError(os.str());
    }
    r.rotation = -static_cast<double>(sys.l()) / static_cast<double>(sys.model().k()) + r.delta_measured;
    return r;
}

std::int64_t horizon_for(double delta, std::int64_t k_abs) {
    double x = 1.0 / (static_cast<double>(k_abs) * delta);
    return static_cast<std::int64_t>(std::ceil(x)) - 1;
}

NumericalCz numerical_cz(const ReebSystem& sys, const orbits::ReebOrbit& orbit, double ambiguity_tol) {
    if (orbit.multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
    NumericalCz out;
    const auto t = static_cast<double>(orbit.multiplicity);
    if (orbit.is_central()) {
        RotationMeasurement rot = rotation_number(sys);
        std::int64_t horizon = horizon_for(rot.delta_measured, abs_k(sys));
        if (orbit.multiplicity > horizon) {
            throw std::out_of_range("multiplicity " + std::to_string(orbit.multiplicity) +
                                    " exceeds the measured horizon " + std::to_string(horizon));
        }
        out.measured = t * rot.rotation;
        double nearest = std::round(out.measured);
        if (std::abs(out.measured - nearest) < ambiguity_tol) {
            out.ambiguous = true;
            out.note = "t * phi is within tolerance of an integer";
        }
        out.value = 2 * static_cast<std::int64_t>(std::floor(out.measured)) + 1;
        return out;
    }
    Monodromy m = saddle_monodromy(sys, orbit.saddle_index, 1);
    out.measured = m.winding / std::numbers::pi;
    double nearest = std::round(out.measured);
    if (std::abs(out.measured - nearest) > ambiguity_tol) {
        out.ambiguous = true;
        out.note = "eigenspace winding is not an integer multiple of pi";
    }
    out.value = orbit.multiplicity * static_cast<std::int64_t>(nearest);
    return out;
}

}  // namespace sutured::dynamics
