#pragma once

#include "sutured/dynamics/flow.hpp"
#include "sutured/dynamics/hamiltonian.hpp"
#include "sutured/dynamics/saddles.hpp"

#include <cstdint>
#include <vector>

namespace sutured::dynamics {

// A model together with its gluing slope, located saddles, and saddle charts.
class ReebSystem {
public:
    ReebSystem(const HamiltonianModel& model, std::int64_t l, const FlowOptions& flow = {},
               const RootOptions& roots = {});

    const HamiltonianModel& model() const { return model_; }
    std::int64_t l() const { return l_; }
    double glue_angle() const;
    const FlowOptions& flow() const { return flow_; }
    const RootOptions& roots() const { return roots_; }
    const std::vector<SaddlePoint>& saddles() const { return saddles_; }
    const std::vector<SaddleChart>& charts() const { return charts_; }
    const SaddleChart& chart(std::int64_t index) const;

    ReebSystem with_flow(const FlowOptions& flow) const;

private:
    HamiltonianModel model_;
    std::int64_t l_;
    FlowOptions flow_;
    RootOptions roots_;
    std::vector<SaddlePoint> saddles_;
    std::vector<SaddleChart> charts_;
};

}  // namespace sutured::dynamics
