#pragma once

#include "sutured/linalg/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sutured::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
};

struct RunConfig {
    std::string subcommand;
    std::int64_t n = 1;
    std::int64_t k = 0;
    std::int64_t l = 1;
    std::int64_t h_max = 12;
    std::int64_t h = 0;
    std::optional<linalg::Rational> delta;
    linalg::Rational coefficient{1};
    bool json = false;
    std::string out_path = ".";
    double tol_ode = 1e-10;
    int resolution = 200;
};

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_dynamics(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_levelsets(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_crosscheck_longitudinal(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sutured::cli
