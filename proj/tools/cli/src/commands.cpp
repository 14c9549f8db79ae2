#include "sutured/cli/commands.hpp"

#include "sutured/chain/chain_complex.hpp"
#include "sutured/chain/longitudinal.hpp"
#include "sutured/cli/homology_json.hpp"
#include "sutured/dynamics/exactness.hpp"
#include "sutured/dynamics/fixed_points.hpp"
#include "sutured/dynamics/foliation.hpp"
#include "sutured/dynamics/monodromy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace sutured::cli {

namespace {

using linalg::Rational;
using orbits::TorusParams;

// Input problems detected after parsing; mapped to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TorusParams make_params(const RunConfig& cfg) {
    orbits::DeltaMode mode = orbits::SymbolicPlus{};
    if (cfg.delta) mode = orbits::ExplicitDelta{*cfg.delta};
    return TorusParams(cfg.n, cfg.k, cfg.l, Rational(1), Rational(1, 10), mode);
}

void require_coefficient(const RunConfig& cfg) {
    if (cfg.coefficient.is_zero()) throw InputError("coefficient c must be nonzero");
}

// Runs a command body, mapping validation errors to exit 2 with a one-line diagnostic.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const orbits::InvalidParameters& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const dynamics::InvalidModel& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

void print_homology_table(const HomologyDocument& doc, const TorusParams& p, std::ostream& out) {
    out << "cylindrical contact homology  " << p.describe() << " c=" << doc.params.coefficient << '\n';
    out << std::setw(6) << "h" << std::setw(7) << "m" << std::setw(7) << "rank" << std::setw(10) << "expected"
        << "  status\n";
    for (const auto& row : doc.rows) {
        if (row.gradings.empty()) {
            out << std::setw(6) << row.h << std::setw(7) << "-" << std::setw(7) << 0 << std::setw(10) << 0
                << "  MATCH\n";
            continue;
        }
        for (const auto& g : row.gradings) {
            out << std::setw(6) << row.h << std::setw(7) << g.m << std::setw(7) << g.rank << std::setw(10)
                << g.expected << "  " << (g.match ? "MATCH" : "MISMATCH") << '\n';
        }
    }
    std::size_t mismatches = 0;
    for (const auto& row : doc.rows) {
        for (const auto& g : row.gradings) mismatches += g.match ? 0 : 1;
    }
    out << "rows: " << doc.rows.size() << "  mismatches: " << mismatches << '\n';
}

}  // namespace

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TorusParams p = make_params(cfg);
        require_coefficient(cfg);
        if (cfg.h_max < 1) throw InputError("hmax must be at least 1");
        if (auto horizon = p.n_delta(); horizon && cfg.h_max > *horizon) {
            throw InputError("hmax exceeds N_delta = " + std::to_string(*horizon));
        }
        chain::TheoremReport report = chain::theorem_check(p, cfg.h_max, cfg.coefficient);
        HomologyDocument doc = make_document(p, cfg.h_max, cfg.coefficient, report);
        if (cfg.json) {
            out << to_json(doc).dump(2) << '\n';
        } else {
            print_homology_table(doc, p, out);
        }
        return doc.all_match ? kOk : kCheckFailed;
    });
}

int cmd_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TorusParams p = make_params(cfg);
        require_coefficient(cfg);
        if (cfg.h < 1) throw InputError("h must be at least 1");
        chain::ComplexSlice s = chain::build_slice(p, cfg.h, cfg.coefficient);
        chain::GradedRanks hom = chain::homology_of_slice(s);
        if (cfg.json) {
            nlohmann::json j;
            j["h"] = std::to_string(s.h);
            j["coeff"] = s.coefficient.to_string();
            j["generators"] = nlohmann::json::array();
            for (auto it = s.groups.rbegin(); it != s.groups.rend(); ++it) {
                for (const auto& g : it->second) {
                    auto inv = orbits::invariants(p, g);
                    j["generators"].push_back({{"orbit", g.label()},
                                               {"grading", std::to_string(inv.grading)},
                                               {"cz", std::to_string(inv.cz_index)},
                                               {"action", inv.action.to_string()},
                                               {"class", std::to_string(inv.homology_class)},
                                               {"type", orbits::to_string(inv.type)}});
                }
            }
            j["differentials"] = nlohmann::json::object();
            for (const auto& [m, d] : s.differentials) j["differentials"][std::to_string(m)] = d.to_string();
            j["homology"] = nlohmann::json::object();
            for (const auto& [m, r] : hom) j["homology"][std::to_string(m)] = std::to_string(r);
            out << j.dump(2) << '\n';
            return kOk;
        }
        out << "chain complex in class h=" << s.h << "  " << p.describe() << " c=" << s.coefficient.to_string()
            << '\n';
        out << "generators:\n";
        for (auto it = s.groups.rbegin(); it != s.groups.rend(); ++it) {
            for (const auto& g : it->second) {
                auto inv = orbits::invariants(p, g);
                out << "  " << std::left << std::setw(12) << g.label() << std::right << " grading " << std::setw(4)
                    << inv.grading << "  cz " << std::setw(4) << inv.cz_index << "  action " << std::setw(8)
                    << inv.action.to_string() << "  class " << inv.homology_class << "  "
                    << orbits::to_string(inv.type) << '\n';
            }
        }
        out << "differentials:\n";
        for (auto it = s.differentials.rbegin(); it != s.differentials.rend(); ++it) {
            const auto& [m, d] = *it;
            out << "  d_" << m << " : C_" << m << " -> C_" << (m - 1) << "  " << d.rows() << "x" << d.cols() << "  "
                << (d.is_zero() ? std::string("zero") : d.to_string()) << '\n';
        }
        out << "homology:";
        if (hom.empty()) out << " 0";
        for (const auto& [m, r] : hom) out << "  H_" << m << " = Q^" << r;
        out << '\n';
        return kOk;
    });
}

namespace {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << std::scientific << v;
    return os.str();
}

}  // namespace

int cmd_verify_dynamics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TorusParams p = make_params(cfg);  // validates (n, k, l)
        if (!(cfg.tol_ode > 0.0)) throw InputError("tol-ode must be positive");
        Rational delta_exact = cfg.delta.value_or(Rational(1, 100));
        TorusParams explicit_p = p.with_mode(orbits::ExplicitDelta{delta_exact});

        dynamics::ModelConfig mc;
        mc.n = cfg.n;
        mc.k = cfg.k;
        mc.delta = delta_exact.to_double();
        dynamics::HamiltonianModel model(mc);
        dynamics::FlowOptions flow = dynamics::FlowOptions::with_tolerance(cfg.tol_ode);

        std::vector<CheckLine> checks;
        auto run_check = [&](const std::string& name, const std::function<CheckLine()>& body) {
            try {
                checks.push_back(body());
            } catch (const std::exception& e) {
                checks.push_back({name, false, e.what()});
            }
        };

        std::optional<dynamics::ReebSystem> sys;
        run_check("saddles", [&] {
            sys.emplace(model, cfg.l, flow);
            double worst = 0.0;
            for (const auto& s : sys->saddles()) worst = std::max(worst, s.gradient_norm);
            bool ok = static_cast<std::int64_t>(sys->saddles().size()) == model.symmetry_order() && worst < 1e-9;
            return CheckLine{"saddles", ok,
                             std::to_string(sys->saddles().size()) + " found (expected " +
                                 std::to_string(model.symmetry_order()) + "), max |grad H| = " + fmt(worst)};
        });
        if (!sys) {
            for (const auto& c : checks) out << std::left << std::setw(22) << c.name << "FAIL  " << c.detail << '\n';
            return kCheckFailed;
        }
        const std::int64_t k_abs = p.abs_k();

        run_check("permutation", [&] {
            auto rep = dynamics::glued_permutation(model, cfg.l, sys->saddles(), flow);
            bool cycles_ok = static_cast<std::int64_t>(rep.cycles.size()) == cfg.n &&
                             std::all_of(rep.cycles.begin(), rep.cycles.end(),
                                         [&](std::int64_t c) { return c == k_abs; });
            std::ostringstream d;
            d << "s -> s" << (cfg.k > 0 ? "-" : "+") << cfg.n * cfg.l << " mod " << model.symmetry_order() << ", cycles";
            for (auto c : rep.cycles) d << ' ' << c;
            d << ", max mismatch " << fmt(rep.max_mismatch);
            return CheckLine{"permutation", rep.matches_expected && cycles_ok, d.str()};
        });

        run_check("fixed-points", [&] {
            auto rep = dynamics::fixed_point_inventory(*sys);
            std::ostringstream d;
            d << rep.found.size() << " expected points, " << rep.spurious.size() << " spurious, " << rep.samples
              << " samples";
            if (!rep.origin_every_period) d << ", origin missing";
            if (!rep.all_saddles_at_k) d << ", saddles missing at period " << k_abs;
            return CheckLine{"fixed-points", rep.ok(), d.str()};
        });

        std::vector<dynamics::Monodromy> saddle_mono;
        run_check("monodromy-det", [&] {
            double worst = 0.0;
            bool types = true;
            for (std::int64_t i = 1; i <= cfg.n; ++i) {
                saddle_mono.push_back(dynamics::saddle_monodromy(*sys, i, 1));
                worst = std::max(worst, std::abs(saddle_mono.back().determinant - 1.0));
                types = types && saddle_mono.back().type == orbits::OrbitType::PositiveHyperbolic;
            }
            auto core = dynamics::core_monodromy(*sys, 1);
            worst = std::max(worst, std::abs(core.determinant - 1.0));
            types = types && core.type == orbits::OrbitType::Elliptic;
            return CheckLine{"monodromy-det", worst <= 1e-8 && types,
                             "max |det - 1| = " + fmt(worst) + (types ? ", types as predicted" : ", wrong orbit type")};
        });

        run_check("saddle-eigenvalues", [&] {
            if (saddle_mono.empty()) throw std::runtime_error("no saddle monodromy available");
            double pred = dynamics::predicted_saddle_eigenvalue(*sys, 1);
            double worst = 0.0;
            for (const auto& m : saddle_mono) {
                worst = std::max(worst, std::abs(m.eig_major.real() - pred) / pred);
            }
            return CheckLine{"saddle-eigenvalues", worst < 1e-6,
                             "predicted exp(|k| a / eps_sym) = " + fmt(pred) + ", max rel. error " + fmt(worst) +
                                 " (rate a/eps_sym per step)"};
        });

        run_check("rotation-number", [&] {
            auto rot = dynamics::rotation_number(*sys);
            double target = -static_cast<double>(cfg.l) / static_cast<double>(cfg.k) + delta_exact.to_double();
            double errv = std::abs(rot.rotation - target);
            return CheckLine{"rotation-number", errv < 1e-6,
                             "measured " + fmt(rot.rotation) + ", expected " + fmt(target) + ", error " + fmt(errv)};
        });

        run_check("cz-oracle", [&] {
            std::int64_t horizon = *explicit_p.n_delta();
            std::int64_t top = std::min<std::int64_t>(horizon, 20);
            std::size_t compared = 0;
            std::vector<std::string> bad;
            for (std::int64_t t = 1; t <= top; ++t) {
                auto o = orbits::ReebOrbit::central(t);
                auto num = dynamics::numerical_cz(*sys, o);
                ++compared;
                if (num.ambiguous || num.value != orbits::cz_index(explicit_p, o)) bad.push_back(o.label());
            }
            for (std::int64_t i = 1; i <= cfg.n; ++i) {
                for (std::int64_t s = 1; s <= top; ++s) {
                    auto o = orbits::ReebOrbit::saddle(i, s);
                    auto num = dynamics::numerical_cz(*sys, o);
                    ++compared;
                    if (num.ambiguous || num.value != orbits::cz_index(p.with_mode(orbits::SymbolicPlus{}), o)) {
                        bad.push_back(o.label());
                    }
                }
            }
            std::string detail = std::to_string(compared) + " orbits up to multiplicity " + std::to_string(top);
            if (!bad.empty()) detail += ", disagreement at " + bad.front();
            return CheckLine{"cz-oracle", bad.empty(), detail};
        });

        auto samples = dynamics::default_region_samples(*sys);
        run_check("exactness", [&] {
            auto rep = dynamics::verify_exactness(*sys, samples);
            return CheckLine{"exactness", rep.passed(1e-8, 1e-10),
                             "max |f_1 - expected| = " + fmt(rep.max_action_deviation) +
                                 ", max |beta(X) - H - expected| = " + fmt(rep.max_pointwise_deviation) +
                                 (rep.all_inside ? "" : ", trajectory left its region")};
        });

        run_check("closed-form-flow", [&] {
            auto rep = dynamics::closed_form_agreement(*sys, samples);
            return CheckLine{"closed-form-flow", rep.max_error <= 1e-9,
                             "max relative endpoint error " + fmt(rep.max_error) + " (threshold 1e-9)"};
        });

        out << "dynamics verification  n=" << cfg.n << " k=" << cfg.k << " l=" << cfg.l
            << " delta=" << delta_exact.to_string() << " tol-ode=" << fmt(cfg.tol_ode) << '\n';
        bool all = true;
        for (const auto& c : checks) {
            all = all && c.pass;
            out << std::left << std::setw(22) << c.name << std::right << (c.pass ? "PASS  " : "FAIL  ") << c.detail
                << '\n';
        }
        out << (all ? "all checks passed" : "some checks failed") << '\n';
        return all ? kOk : kCheckFailed;
    });
}

int cmd_levelsets(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TorusParams p = make_params(cfg);
        if (cfg.resolution <= 0) throw InputError("resolution must be positive");
        dynamics::ModelConfig mc;
        mc.n = p.n();
        mc.k = p.k();
        if (cfg.delta) mc.delta = cfg.delta->to_double();
        dynamics::HamiltonianModel model(mc);
        dynamics::ReebSystem sys(model, p.l());
        auto data = dynamics::export_foliation(sys, cfg.resolution, dynamics::default_box(model));

        namespace fs = std::filesystem;
        fs::path dir(cfg.out_path);
        std::error_code ec;
        fs::create_directories(dir, ec);
        auto write = [&](const fs::path& file, const std::vector<dynamics::Polyline>& lines) {
            std::ofstream f(file, std::ios::binary);
            f << dynamics::format_polylines(lines);
            f.close();
            if (!f) throw std::runtime_error("cannot write " + file.string());
        };
        write(dir / "levelsets.txt", data.level_sets);
        write(dir / "foliation.txt", data.kernel_curves);
        out << "wrote " << data.level_sets.size() << " level-set polylines to " << (dir / "levelsets.txt").string()
            << '\n';
        out << "wrote " << data.kernel_curves.size() << " foliation polylines to "
            << (dir / "foliation.txt").string() << '\n';
        return kOk;
    });
}

int cmd_crosscheck_longitudinal(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TorusParams p = make_params(cfg);
        require_coefficient(cfg);
        if (cfg.h_max < 1) throw InputError("hmax must be at least 1");
        std::int64_t n_long = p.n() * p.abs_k();
        auto ranks = chain::longitudinal_ranks(n_long, cfg.h_max, cfg.coefficient);
        auto expected = static_cast<std::size_t>(n_long - 1);
        bool all = true;
        if (cfg.json) {
            nlohmann::json j;
            j["n_long"] = std::to_string(n_long);
            j["expected"] = std::to_string(expected);
            j["rows"] = nlohmann::json::array();
            for (const auto& [h, r] : ranks) {
                all = all && r == expected;
                j["rows"].push_back({{"h", std::to_string(h)}, {"rank", std::to_string(r)}, {"match", r == expected}});
            }
            j["all_match"] = all;
            out << j.dump(2) << '\n';
        } else {
            out << "longitudinal cross-check  n|k|=" << n_long << "  expected rank " << expected << '\n';
            out << std::setw(6) << "h" << std::setw(7) << "rank" << "  status\n";
            for (const auto& [h, r] : ranks) {
                all = all && r == expected;
                out << std::setw(6) << h << std::setw(7) << r << "  " << (r == expected ? "MATCH" : "MISMATCH") << '\n';
            }
        }
        return all ? kOk : kCheckFailed;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string delta_text;
    std::string coeff_text;
    bool hmax_given = false;

    CLI::App app{"Sutured solid torus: cylindrical contact homology and Reeb dynamics checks", "sutured"};
    app.set_help_flag("--help", "print this help and exit");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--n", cfg.n, "half the number of sutures");
    app.add_option("--k", cfg.k, "suture slope numerator, |k| >= 2")->required();
    app.add_option("--l", cfg.l, "suture slope denominator, 0 < l < |k|");
    auto* hmax_opt = app.add_option("--hmax", cfg.h_max, "largest homology class");
    app.add_option("--h", cfg.h, "homology class for slice");
    app.add_option("--delta", delta_text, "explicit rotation offset NUM/DEN");
    app.add_option("--coeff", coeff_text, "cylinder count NUM/DEN (default 1)");
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.add_option("--out", cfg.out_path, "output directory for levelsets");
    app.add_option("--tol-ode", cfg.tol_ode, "integrator tolerance");
    app.add_option("--resolution", cfg.resolution, "grid cells per axis for levelsets");

    std::vector<std::pair<CLI::App*, std::string>> subs;
    for (const char* name : {"homology", "slice", "verify-dynamics", "levelsets", "crosscheck-longitudinal"}) {
        subs.emplace_back(app.add_subcommand(name), name);
    }
    subs[0].first->description("homology ranks per class against the closed-form answer");
    subs[1].first->description("generators, gradings and differential of one class");
    subs[2].first->description("numerical checks of the Hamiltonian model");
    subs[3].first->description("write level sets of H and the kernel foliation");
    subs[4].first->description("ranks of the longitudinal model");

    std::vector<std::string> argv_store{"sutured"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    hmax_given = hmax_opt->count() > 0;

    try {
        if (!delta_text.empty()) cfg.delta = Rational::parse(delta_text);
        if (!coeff_text.empty()) cfg.coefficient = Rational::parse(coeff_text);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    for (const auto& [sub, name] : subs) {
        if (!sub->parsed()) continue;
        cfg.subcommand = name;
        if (name == "homology") return cmd_homology(cfg, out, err);
        if (name == "slice") return cmd_slice(cfg, out, err);
        if (name == "verify-dynamics") return cmd_verify_dynamics(cfg, out, err);
        if (name == "levelsets") return cmd_levelsets(cfg, out, err);
        if (!hmax_given) cfg.h_max = 20;
        return cmd_crosscheck_longitudinal(cfg, out, err);
    }
    err << "error: no subcommand\n";
    return kInvalidInput;
}

}  // namespace sutured::cli
