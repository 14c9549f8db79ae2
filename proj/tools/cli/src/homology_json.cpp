#include "sutured/cli/homology_json.hpp"

#include <set>
#include <stdexcept>

namespace sutured::cli {

HomologyDocument make_document(const orbits::TorusParams& p, std::int64_t h_max, const linalg::Rational& c,
                               const chain::TheoremReport& report) {
    HomologyDocument doc;
    doc.params.n = p.n();
    doc.params.k = p.k();
    doc.params.l = p.l();
    doc.params.h_max = h_max;
    if (const auto* ex = std::get_if<orbits::ExplicitDelta>(&p.delta_mode())) {
        doc.params.delta = ex->delta.to_string();
    } else {
        doc.params.delta = "0+";
    }
    doc.params.coefficient = c.to_string();
    for (const auto& row : report.rows) {
        HomologyRow out;
        out.h = row.h;
        out.total = row.total;
        std::set<std::int64_t, std::greater<>> gradings;
        for (const auto& [m, r] : row.computed) gradings.insert(m);
        for (const auto& [m, r] : row.expected) gradings.insert(m);
        for (std::int64_t m : gradings) {
            GradingEntry e;
            e.m = m;
            auto it = row.computed.find(m);
            e.rank = it == row.computed.end() ? 0 : it->second;
            auto ex = row.expected.find(m);
            e.expected = ex == row.expected.end() ? 0 : ex->second;
            e.match = e.rank == e.expected;
            out.gradings.push_back(e);
        }
        doc.rows.push_back(std::move(out));
    }
    doc.all_match = report.all_match();
    return doc;
}

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::int64_t to_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw std::invalid_argument(std::string("expected string field '") + key + "'");
    }
    const std::string& s = j.at(key).get_ref<const std::string&>();
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw std::invalid_argument(std::string("field '") + key + "' is not an integer: " + s);
    }
    return v;
}

std::string to_str(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw std::invalid_argument(std::string("expected string field '") + key + "'");
    }
    return j.at(key).get<std::string>();
}

bool to_bool(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_boolean()) {
        throw std::invalid_argument(std::string("expected boolean field '") + key + "'");
    }
    return j.at(key).get<bool>();
}

}  // namespace

nlohmann::json to_json(const HomologyDocument& doc) {
    nlohmann::json j;
    j["params"] = {{"n", num(doc.params.n)},
                   {"k", num(doc.params.k)},
                   {"l", num(doc.params.l)},
                   {"hmax", num(doc.params.h_max)},
                   {"delta", doc.params.delta},
                   {"coeff", doc.params.coefficient}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : doc.rows) {
        nlohmann::json r;
        r["h"] = num(row.h);
        r["gradings"] = nlohmann::json::array();
        for (const auto& g : row.gradings) {
            r["gradings"].push_back(
                {{"m", num(g.m)}, {"rank", num(g.rank)}, {"expected", num(g.expected)}, {"match", g.match}});
        }
        r["total"] = num(row.total);
        j["rows"].push_back(std::move(r));
    }
    j["all_match"] = doc.all_match;
    return j;
}

HomologyDocument from_json(const nlohmann::json& j) {
    HomologyDocument doc;
    if (!j.is_object() || !j.contains("params") || !j.contains("rows")) {
        throw std::invalid_argument("homology document needs params and rows");
    }
    const auto& p = j.at("params");
    doc.params.n = to_int(p, "n");
    doc.params.k = to_int(p, "k");
    doc.params.l = to_int(p, "l");
    doc.params.h_max = to_int(p, "hmax");
    doc.params.delta = to_str(p, "delta");
    doc.params.coefficient = to_str(p, "coeff");
    if (!j.at("rows").is_array()) throw std::invalid_argument("rows must be an array");
    for (const auto& r : j.at("rows")) {
        HomologyRow row;
        row.h = to_int(r, "h");
        row.total = static_cast<std::size_t>(to_int(r, "total"));
        if (!r.contains("gradings") || !r.at("gradings").is_array()) {
            throw std::invalid_argument("row gradings must be an array");
        }
        for (const auto& g : r.at("gradings")) {
            GradingEntry e;
            e.m = to_int(g, "m");
            e.rank = static_cast<std::size_t>(to_int(g, "rank"));
            e.expected = static_cast<std::size_t>(to_int(g, "expected"));
            e.match = to_bool(g, "match");
            row.gradings.push_back(e);
        }
        doc.rows.push_back(std::move(row));
    }
    doc.all_match = to_bool(j, "all_match");
    return doc;
}

}  // namespace sutured::cli
