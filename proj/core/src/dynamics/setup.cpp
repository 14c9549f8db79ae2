#include "sutured/dynamics/setup.hpp"

#include <numeric>
#include <stdexcept>

namespace sutured::dynamics {

ReebSystem::ReebSystem(const HamiltonianModel& model, std::int64_t l, const FlowOptions& flow,
                       const RootOptions& roots)
    : model_(model), l_(l), flow_(flow), roots_(roots) {
    std::int64_t abs_k = model_.k() < 0 ? -model_.k() : model_.k();
    if (l_ < 1 || l_ >= abs_k) throw InvalidModel("l must satisfy 0 < l < |k|");
    if (std::gcd(abs_k, l_) != 1) throw InvalidModel("gcd(|k|,l) must be 1");
    saddles_ = find_saddles(model_, roots_);
    charts_ = build_charts(model_, saddles_);
}

double ReebSystem::glue_angle() const { return dynamics::glue_angle(model_.k(), l_); }

const SaddleChart& ReebSystem::chart(std::int64_t index) const {
    if (index < 1 || index > static_cast<std::int64_t>(charts_.size())) {
        throw std::out_of_range("saddle index out of range");
    }
    return charts_[static_cast<std::size_t>(index - 1)];
}

ReebSystem ReebSystem::with_flow(const FlowOptions& flow) const {
    ReebSystem copy = *this;
    copy.flow_ = flow;
    return copy;
}

}  // namespace sutured::dynamics
