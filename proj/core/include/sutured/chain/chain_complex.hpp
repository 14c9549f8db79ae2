#pragma once

#include "sutured/linalg/qmatrix.hpp"
#include "sutured/orbits/orbit_model.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sutured::chain {

using linalg::QMatrix;
using linalg::Rational;
using orbits::ReebOrbit;
using orbits::TorusParams;

using GradedRanks = std::map<std::int64_t, std::size_t>;

// Chain groups and differentials of one homology class.
struct ComplexSlice {
    std::int64_t h = 0;
    Rational coefficient{1};
    std::map<std::int64_t, std::vector<ReebOrbit>> groups;
    // differentials[m] : C_m -> C_{m-1}, shape |C_{m-1}| x |C_m|, present for every m in groups.
    std::map<std::int64_t, QMatrix> differentials;

    std::size_t size(std::int64_t m) const;
};

// Coefficient of `target` in the boundary of `source`. Nonzero only for an elliptic source and
// saddle target in the same class whose grading drops by one and whose action strictly drops.
Rational cylinder_count(const TorusParams& p, const ReebOrbit& source, const ReebOrbit& target,
                        const Rational& c);

ComplexSlice build_slice(const TorusParams& p, std::int64_t h, const Rational& c = Rational(1));

// Nonzero ranks only.
GradedRanks homology_of_slice(const ComplexSlice& s);

GradedRanks expected_homology(const TorusParams& p, std::int64_t h);

struct TheoremRow {
    std::int64_t h = 0;
    GradedRanks computed;
    GradedRanks expected;
    bool match = false;
    std::size_t total = 0;
};

struct TheoremReport {
    std::vector<TheoremRow> rows;
    std::vector<std::int64_t> mismatches;

    bool all_match() const { return mismatches.empty(); }
};

TheoremReport theorem_check(const TorusParams& p, std::int64_t h_max,
                            const Rational& c = Rational(1));

std::size_t total_rank(const GradedRanks& ranks);

}  // namespace sutured::chain
