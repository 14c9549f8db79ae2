#pragma once

#include "sutured/dynamics/flow.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <string>

namespace sutured::dynamics::detail {

// Adaptive dopri5 from t0 to t1 with step-underflow and step-budget guards.
template <class State, class System>
State run_controlled(const System& system, State x, double t0, double t1, const FlowOptions& opts) {
    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(opts.tol_abs, opts.tol_rel);
    const double span = t1 - t0;
    double t = t0;
    double dt = std::min(opts.dt_initial, span);
    std::size_t steps = 0;
    while (t < t1) {
        if (++steps > opts.max_steps) {
            throw IntegrationError("step budget of " + std::to_string(opts.max_steps) +
                                   " exhausted at t=" + std::to_string(t));
        }
        double remaining = t1 - t;
        if (remaining <= 1e-15 * span) break;
        dt = std::min(dt, remaining);
        if (dt < opts.dt_min && dt < remaining) {
            throw IntegrationError("step size underflow at t=" + std::to_string(t));
        }
        stepper.try_step(system, x, t, dt);
    }
    return x;
}

}  // namespace sutured::dynamics::detail
