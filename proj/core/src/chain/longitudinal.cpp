#include "sutured/chain/longitudinal.hpp"

#include <stdexcept>

namespace sutured::chain {

linalg::QMatrix longitudinal_differential(std::int64_t n_long, const linalg::Rational& c) {
    if (n_long < 1) {
        throw std::invalid_argument("n_long must be at least 1");
    }
    if (c.is_zero()) {
        throw std::invalid_argument("cylinder coefficient c must be nonzero");
    }
    auto size = static_cast<std::size_t>(n_long) + 1;
    linalg::QMatrix d(size, size);
    for (std::size_t i = 1; i < size; ++i) {
        d(i, 0) = c;
    }
    return d;
}

std::map<std::int64_t, std::size_t> longitudinal_ranks(std::int64_t n_long, std::int64_t h_max,
                                                       const linalg::Rational& c) {
    if (h_max < 1) {
        throw std::invalid_argument("h_max must be at least 1");
    }
    std::map<std::int64_t, std::size_t> out;
    for (std::int64_t h = 1; h <= h_max; ++h) {
        // Every class carries the same generator pattern, one cover of each simple orbit.
        linalg::QMatrix d = longitudinal_differential(n_long, c);
        out[h] = linalg::homology_rank(d, d);
    }
    return out;
}

}  // namespace sutured::chain
