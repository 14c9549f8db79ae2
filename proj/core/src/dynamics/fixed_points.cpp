#include "sutured/dynamics/fixed_points.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <algorithm>

namespace sutured::dynamics {

namespace {

struct Iterate {
    Vec2 point;
    Mat2 jacobian;
};

Iterate iterate_map(const ReebSystem& sys, Vec2 x, std::int64_t j) {
    TangentState s;
    s.point = x;
    for (std::int64_t i = 0; i < j; ++i) {
        s = glued_return_map(sys.model(), sys.l(), s, sys.flow());
    }
    return {s.point, s.jacobian};
}

}  // namespace

FixedPointReport fixed_point_inventory(const ReebSystem& sys, const FixedPointOptions& opts) {
    const auto& model = sys.model();
    const std::int64_t k_abs = model.k() < 0 ? -model.k() : model.k();
    const double R = opts.radius > 0.0 ? opts.radius : model.config().r_cut;
    int g = opts.grid;
    if (g <= 0) {
        double spacing = std::min(2.0 * R / 80.0, std::numbers::pi * model.critical_radius() /
                                                      (2.0 * static_cast<double>(model.symmetry_order())));
        g = static_cast<int>(std::ceil(2.0 * R / spacing)) + 1;
    }
    const double h = 2.0 * R / static_cast<double>(g - 1);
    const double inf = std::numeric_limits<double>::infinity();

    FixedPointReport rep;
    // disp[j-1][row * g + col] = length of the Newton step for F^j(x) - x, infinite outside the
    // disk. Near a fixed point it approximates the distance to it, whatever the eigenvalues, so
    // strongly hyperbolic points still produce a grid minimum next to them.
    std::vector<std::vector<double>> disp(static_cast<std::size_t>(k_abs),
                                          std::vector<double>(static_cast<std::size_t>(g * g), inf));
    auto at = [&](int row, int col) { return Vec2{-R + col * h, -R + row * h}; };
    for (int row = 0; row < g; ++row) {
        for (int col = 0; col < g; ++col) {
            Vec2 x = at(row, col);
            if (x.norm() >= R) continue;
            ++rep.samples;
            TangentState y;
            y.point = x;
            try {
                for (std::int64_t j = 1; j <= k_abs; ++j) {
                    y = glued_return_map(model, sys.l(), y, sys.flow());
                    Mat2 DG = y.jacobian - Mat2::identity();
                    double len = DG.det() == 0.0 ? inf : (DG.inverse() * (y.point - x)).norm();
                    disp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(row * g + col)] = len;
                }
            } catch (const IntegrationError&) {
                ++rep.escaped;  // later iterates stay infinite
            }
        }
    }

    std::vector<std::vector<bool>> origin_seen(1, std::vector<bool>(static_cast<std::size_t>(k_abs), false));
    std::vector<bool> saddle_seen(sys.saddles().size(), false);

    for (std::int64_t j = 1; j <= k_abs; ++j) {
        const auto& d = disp[static_cast<std::size_t>(j - 1)];
        std::vector<FixedPoint> period_points;
        for (int row = 0; row < g; ++row) {
            for (int col = 0; col < g; ++col) {
                double v = d[static_cast<std::size_t>(row * g + col)];
                if (v == inf) continue;
                bool is_min = true;
                for (int dr = -1; dr <= 1 && is_min; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        int r2 = row + dr, c2 = col + dc;
                        if (r2 < 0 || r2 >= g || c2 < 0 || c2 >= g) continue;
                        if (d[static_cast<std::size_t>(r2 * g + c2)] < v) {
                            is_min = false;
                            break;
                        }
                    }
                }
                if (!is_min) continue;
                ++rep.candidates;

                // Newton on F^j(x) - x with a backtracking line search on the residual.
                Vec2 x = at(row, col);
                bool converged = false;
                double residual = inf;
                Iterate f;
                try {
                    f = iterate_map(sys, x, j);
                    residual = (f.point - x).norm();
                } catch (const IntegrationError&) {
                }
                for (int it = 0; it < opts.max_iterations && residual < inf; ++it) {
                    if (residual < opts.newton_tol) {
                        converged = true;
                        break;
                    }
                    Mat2 DG = f.jacobian - Mat2::identity();
                    if (DG.det() == 0.0) break;
                    Vec2 step = DG.inverse() * (f.point - x);
                    double len = step.norm();
                    if (len > 2.0 * h) step = (2.0 * h / len) * step;
                    bool improved = false;
                    for (int halving = 0; halving < 12 && !improved; ++halving, step = 0.5 * step) {
                        Vec2 trial = x - step;
                        if (trial.norm() >= R) continue;
                        try {
                            Iterate ft = iterate_map(sys, trial, j);
                            double r = (ft.point - trial).norm();
                            if (r < residual) {
                                x = trial;
                                f = ft;
                                residual = r;
                                improved = true;
                            }
                        } catch (const IntegrationError&) {
                        }
                    }
                    if (!improved) break;
                }
                if (!converged) {
                    ++rep.unconverged;
                    continue;
                }
                bool duplicate = false;
                for (const auto& fp : period_points) {
                    if ((fp.point - x).norm() < opts.match_tol) duplicate = true;
                }
                if (duplicate) continue;

                FixedPoint fp{j, x, residual, "spurious"};
                if (x.norm() < opts.match_tol) {
                    fp.label = "origin";
                    origin_seen[0][static_cast<std::size_t>(j - 1)] = true;
                } else if (j % k_abs == 0) {
                    for (const auto& sp : sys.saddles()) {
                        if ((sp.point - x).norm() < opts.match_tol) {
                            fp.label = "saddle " + std::to_string(sp.index);
                            saddle_seen[static_cast<std::size_t>(sp.index - 1)] = true;
                        }
                    }
                }
                period_points.push_back(fp);
                if (fp.label == "spurious") {
                    rep.spurious.push_back(fp);
                } else {
                    rep.found.push_back(fp);
                }
            }
        }
    }
    rep.origin_every_period = true;
    for (bool b : origin_seen[0]) rep.origin_every_period = rep.origin_every_period && b;
    rep.all_saddles_at_k = true;
    for (bool b : saddle_seen) rep.all_saddles_at_k = rep.all_saddles_at_k && b;
    return rep;
}

}  // namespace sutured::dynamics
