#include "sutured/dynamics/saddles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sutured::dynamics {

std::vector<SaddlePoint> find_saddles(const HamiltonianModel& model, const RootOptions& opts) {
    const std::int64_t M = model.symmetry_order();
    const double r_c = model.critical_radius();
    std::vector<SaddlePoint> out;
    out.reserve(static_cast<std::size_t>(M));
    for (std::int64_t j = 1; j <= M; ++j) {
        double theta = (2.0 * static_cast<double>(j) - 1.0) * std::numbers::pi / static_cast<double>(M);
        Vec2 p = polar(r_c, theta);
        SaddlePoint sp;
        sp.index = j;
        bool converged = false;
        for (int it = 1; it <= opts.max_iterations; ++it) {
            Vec2 g = model.gradient(p);
            Hessian h = model.hessian(p);
            Mat2 H{h.xx, h.xy, h.xy, h.yy};
            if (H.det() == 0.0) break;
            Vec2 step = H.inverse() * g;
            p = p - step;
            sp.iterations = it;
            if (step.norm() < opts.tol_step) {
                converged = true;
                break;
            }
        }
        sp.point = p;
        sp.gradient_norm = model.gradient(p).norm();
        Hessian h = model.hessian(p);
        sp.hessian_det = h.xx * h.yy - h.xy * h.xy;
        std::ostringstream why;
        if (!converged) {
            why << "Newton did not converge for saddle " << j << " after " << sp.iterations << " iterations";
        } else if (!(sp.gradient_norm < opts.tol_gradient)) {
            why << "saddle " << j << " gradient norm " << sp.gradient_norm << " exceeds " << opts.tol_gradient;
        } else if (!(sp.hessian_det < 0.0)) {
            why << "critical point " << j << " is not a saddle (Hessian det " << sp.hessian_det << ")";
        }
        if (!why.str().empty()) throw SaddleSearchError(why.str());
        out.push_back(sp);
    }
    double defect = symmetry_defect(out, M);
    if (!(defect < opts.tol_geom)) {
        std::ostringstream why;
        why << "saddles break the cyclic symmetry by " << defect;
        throw SaddleSearchError(why.str());
    }
    return out;
}

double symmetry_defect(const std::vector<SaddlePoint>& saddles, std::int64_t order) {
    Mat2 R = Mat2::rotation(2.0 * std::numbers::pi / static_cast<double>(order));
    double worst = 0.0;
    for (std::size_t j = 0; j < saddles.size(); ++j) {
        Vec2 next = saddles[(j + 1) % saddles.size()].point;
        worst = std::max(worst, (R * saddles[j].point - next).norm());
    }
    return worst;
}

std::int64_t expected_saddle_image(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t l) {
    std::int64_t M = n * (k < 0 ? -k : k);
    std::int64_t shift = k > 0 ? -n * l : n * l;
    std::int64_t zero_based = ((s - 1 + shift) % M + M) % M;
    return zero_based + 1;
}

std::vector<std::int64_t> cycle_lengths(const std::vector<std::int64_t>& image) {
    std::vector<bool> seen(image.size(), false);
    std::vector<std::int64_t> lengths;
    for (std::size_t start = 0; start < image.size(); ++start) {
        if (seen[start]) continue;
        std::int64_t len = 0;
        std::size_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            ++len;
            cur = static_cast<std::size_t>(image[cur] - 1);
        }
        lengths.push_back(len);
    }
    return lengths;
}

PermutationReport glued_permutation(const HamiltonianModel& model, std::int64_t l,
                                    const std::vector<SaddlePoint>& saddles, const FlowOptions& flow) {
    PermutationReport rep;
    rep.matches_expected = true;
    for (const auto& sp : saddles) {
        Vec2 img = glued_return_map(model, l, sp.point, flow);
        double best = std::numeric_limits<double>::infinity();
        std::int64_t best_index = 0;
        for (const auto& other : saddles) {
            double d = (other.point - img).norm();
            if (d < best) {
                best = d;
                best_index = other.index;
            }
        }
        rep.image.push_back(best_index);
        rep.max_mismatch = std::max(rep.max_mismatch, best);
        if (best_index != expected_saddle_image(sp.index, model.n(), model.k(), l)) {
            rep.matches_expected = false;
        }
    }
    rep.cycles = cycle_lengths(rep.image);
    return rep;
}

std::vector<SaddleChart> build_charts(const HamiltonianModel& model, const std::vector<SaddlePoint>& saddles) {
    std::vector<SaddleChart> charts;
    if (saddles.empty()) return charts;
    const std::int64_t M = model.symmetry_order();

    // Principal axes of the Hessian at the first saddle.
    Hessian h = model.hessian(saddles.front().point);
    Mat2 H{h.xx, h.xy, h.xy, h.yy};
    auto [l1, l2] = eigenvalues(H);
    double neg = std::min(l1.real(), l2.real());
    double pos = std::max(l1.real(), l2.real());
    Vec2 e1 = real_eigenvector(H, neg);
    Vec2 e2{-e1.y, e1.x};
    double a = std::sqrt(-neg * pos);
    double s = std::sqrt(2.0 * a);
    double cu = s / (2.0 * std::sqrt(-neg));
    double cv = s / (2.0 * std::sqrt(pos));
    // Columns: d/dx = cu e1 + cv e2, d/dy = -cu e1 + cv e2.
    Mat2 frame{cu * e1.x + cv * e2.x, -cu * e1.x + cv * e2.x,
               cu * e1.y + cv * e2.y, -cu * e1.y + cv * e2.y};

    for (const auto& sp : saddles) {
        double turn = 2.0 * std::numbers::pi * static_cast<double>(sp.index - 1) / static_cast<double>(M);
        SaddleChart c;
        c.index = sp.index;
        c.center = sp.point;
        c.frame = Mat2::rotation(turn) * frame;
        c.a = a;
        c.radius = 0.25 * model.critical_radius();
        charts.push_back(c);
    }
    return charts;
}

}  // namespace sutured::dynamics
