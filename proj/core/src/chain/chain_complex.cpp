#include "sutured/chain/chain_complex.hpp"

#include <stdexcept>
#include <string>

namespace sutured::chain {

std::size_t ComplexSlice::size(std::int64_t m) const {
    auto it = groups.find(m);
    return it == groups.end() ? 0 : it->second.size();
}

Rational cylinder_count(const TorusParams& p, const ReebOrbit& source, const ReebOrbit& target,
                        const Rational& c) {
    if (!source.is_central() || target.is_central()) {
        return Rational(0);
    }
    if (orbits::homology_class(p, source) != orbits::homology_class(p, target)) {
        return Rational(0);
    }
    if (orbits::grading(p, source) - orbits::grading(p, target) != 1) {
        return Rational(0);
    }
    if (!(orbits::action(p, source) > orbits::action(p, target))) {
        return Rational(0);
    }
    return c;
}

ComplexSlice build_slice(const TorusParams& p, std::int64_t h, const Rational& c) {
    if (h < 1) {
        throw std::invalid_argument("homology class h must be at least 1");
    }
    if (c.is_zero()) {
        throw std::invalid_argument("cylinder coefficient c must be nonzero");
    }
    if (auto horizon = p.n_delta(); horizon && h > *horizon) {
        throw std::out_of_range("class h = " + std::to_string(h) + " exceeds N_delta = " +
                                std::to_string(*horizon));
    }

    ComplexSlice s;
    s.h = h;
    s.coefficient = c;
    for (const auto& g : orbits::enumerate_generators(p, h)) {
        s.groups[orbits::grading(p, g)].push_back(g);
    }
    for (const auto& [m, sources] : s.groups) {
        auto below = s.groups.find(m - 1);
        std::size_t rows = below == s.groups.end() ? 0 : below->second.size();
        QMatrix d(rows, sources.size());
        for (std::size_t col = 0; col < sources.size(); ++col) {
            for (std::size_t row = 0; row < rows; ++row) {
                d(row, col) = cylinder_count(p, sources[col], below->second[row], c);
            }
        }
        s.differentials.emplace(m, std::move(d));
    }
    return s;
}

GradedRanks homology_of_slice(const ComplexSlice& s) {
    GradedRanks out;
    for (const auto& [m, gens] : s.groups) {
        const QMatrix& d_out = s.differentials.at(m);
        auto above = s.differentials.find(m + 1);
        QMatrix d_in = above == s.differentials.end() ? QMatrix(gens.size(), 0) : above->second;
        std::size_t r = linalg::homology_rank(d_out, d_in);
        if (r > 0) {
            out[m] = r;
        }
    }
    return out;
}

GradedRanks expected_homology(const TorusParams& p, std::int64_t h) {
    if (h < 1) {
        throw std::invalid_argument("homology class h must be at least 1");
    }
    GradedRanks out;
    if (h % p.abs_k() != 0) {
        Rational x = Rational(-h * p.l()) / Rational(p.k());
        out[2 * orbits::floor_plus(x)] = 1;
    } else if (p.n() > 1) {
        std::int64_t s = h / p.abs_k();
        out[-p.sign_k() * 2 * p.l() * s - 1] = static_cast<std::size_t>(p.n() - 1);
    }
    return out;
}

std::size_t total_rank(const GradedRanks& ranks) {
    std::size_t total = 0;
    for (const auto& [m, r] : ranks) total += r;
    return total;
}

TheoremReport theorem_check(const TorusParams& p, std::int64_t h_max, const Rational& c) {
    if (h_max < 1) {
        throw std::invalid_argument("h_max must be at least 1");
    }
    TheoremReport report;
    for (std::int64_t h = 1; h <= h_max; ++h) {
        TheoremRow row;
        row.h = h;
        row.computed = homology_of_slice(build_slice(p, h, c));
        row.expected = expected_homology(p, h);
        row.match = row.computed == row.expected;
        row.total = total_rank(row.computed);
        if (!row.match) {
            report.mismatches.push_back(h);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace sutured::chain
