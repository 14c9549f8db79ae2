#pragma once

#include "sutured/linalg/qmatrix.hpp"

#include <cstdint>
#include <map>

namespace sutured::chain {

// Ungraded complex of one class in the longitudinal model: generator 0 is the elliptic orbit,
// generators 1..n_long the hyperbolic ones. Column 0 carries c into every hyperbolic generator.
linalg::QMatrix longitudinal_differential(std::int64_t n_long, const linalg::Rational& c);

// Total homology rank per class h in 1..h_max.
std::map<std::int64_t, std::size_t> longitudinal_ranks(std::int64_t n_long, std::int64_t h_max,
                                                       const linalg::Rational& c);

}  // namespace sutured::chain
