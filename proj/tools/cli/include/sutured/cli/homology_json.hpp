#pragma once

#include "sutured/chain/chain_complex.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sutured::cli {

struct GradingEntry {
    std::int64_t m = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool match = true;

    friend bool operator==(const GradingEntry&, const GradingEntry&) = default;
};

struct HomologyRow {
    std::int64_t h = 0;
    std::vector<GradingEntry> gradings;  // descending m
    std::size_t total = 0;

    friend bool operator==(const HomologyRow&, const HomologyRow&) = default;
};

struct HomologyParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::int64_t h_max = 0;
    std::string delta;  // "0+" or a rational
    std::string coefficient;

    friend bool operator==(const HomologyParams&, const HomologyParams&) = default;
};

struct HomologyDocument {
    HomologyParams params;
    std::vector<HomologyRow> rows;
    bool all_match = true;

    friend bool operator==(const HomologyDocument&, const HomologyDocument&) = default;
};

HomologyDocument make_document(const orbits::TorusParams& p, std::int64_t h_max, const linalg::Rational& c,
                               const chain::TheoremReport& report);

// Every number is written as a decimal string.
nlohmann::json to_json(const HomologyDocument& doc);
// Throws std::invalid_argument on schema violations.
HomologyDocument from_json(const nlohmann::json& j);

}  // namespace sutured::cli
