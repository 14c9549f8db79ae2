#include "sutured/dynamics/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sutured::dynamics {

Box default_box(const HamiltonianModel& model) {
    double w = 3.0 * model.critical_radius();
    return {-w, w, -w, w};
}

namespace {

struct Segment {
    long long e0;
    long long e1;
};

}  // namespace

std::vector<Polyline> contour(const std::function<double(Vec2)>& f, double level, const Box& box,
                              int resolution, const std::string& id_prefix) {
    std::vector<Polyline> out;
    if (box.empty() || resolution <= 0) return out;
    const int n = resolution;
    const long long stride = n + 1;
    const double hx = (box.xmax - box.xmin) / n;
    const double hy = (box.ymax - box.ymin) / n;
    auto vertex = [&](int i, int j) { return Vec2{box.xmin + i * hx, box.ymin + j * hy}; };

    std::vector<double> val(static_cast<std::size_t>(stride * stride));
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            double v = f(vertex(i, j)) - level;
            val[static_cast<std::size_t>(j * stride + i)] = v == 0.0 ? 1e-300 : v;
        }
    }
    auto value = [&](int i, int j) { return val[static_cast<std::size_t>(j * stride + i)]; };
    auto h_edge = [&](int i, int j) { return 2 * (j * stride + i); };
    auto v_edge = [&](int i, int j) { return 2 * (j * stride + i) + 1; };

    auto edge_point = [&](long long id) {
        long long base = id / 2;
        int i = static_cast<int>(base % stride);
        int j = static_cast<int>(base / stride);
        Vec2 p0 = vertex(i, j);
        Vec2 p1 = (id % 2 == 0) ? vertex(i + 1, j) : vertex(i, j + 1);
        double v0 = value(i, j);
        double v1 = (id % 2 == 0) ? value(i + 1, j) : value(i, j + 1);
        double t = v0 / (v0 - v1);
        return p0 + t * (p1 - p0);
    };

    std::vector<Segment> segs;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double c[4] = {value(i, j), value(i + 1, j), value(i + 1, j + 1), value(i, j + 1)};
            long long e[4] = {h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
            bool pos[4] = {c[0] > 0, c[1] > 0, c[2] > 0, c[3] > 0};
            std::vector<long long> crossed;
            // Edge m joins corner m and corner m+1.
            for (int m = 0; m < 4; ++m) {
                if (pos[m] != pos[(m + 1) % 4]) crossed.push_back(e[m]);
            }
            if (crossed.size() == 2) {
                segs.push_back({crossed[0], crossed[1]});
            } else if (crossed.size() == 4) {
                double centre = 0.25 * (c[0] + c[1] + c[2] + c[3]);
                if ((centre > 0) == pos[0]) {
                    // Corners 0 and 2 connect through the centre; cut off corners 1 and 3.
                    segs.push_back({e[0], e[1]});
                    segs.push_back({e[2], e[3]});
                } else {
                    segs.push_back({e[3], e[0]});
                    segs.push_back({e[1], e[2]});
                }
            }
        }
    }

    std::map<long long, std::vector<std::size_t>> incident;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        incident[segs[s].e0].push_back(s);
        incident[segs[s].e1].push_back(s);
    }
    std::vector<bool> used(segs.size(), false);
    auto walk = [&](long long start_edge, std::size_t first_seg) {
        Polyline line;
        line.points.push_back(edge_point(start_edge));
        long long cur = start_edge;
        std::size_t seg = first_seg;
        while (true) {
            used[seg] = true;
            long long next = segs[seg].e0 == cur ? segs[seg].e1 : segs[seg].e0;
            if (next == start_edge) {
                line.closed = true;
                break;
            }
            line.points.push_back(edge_point(next));
            cur = next;
            bool advanced = false;
            for (std::size_t cand : incident[cur]) {
                if (!used[cand]) {
                    seg = cand;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        return line;
    };
    // Open chains first (they start on the boundary), then closed loops.
    for (const auto& [edge, list] : incident) {
        if (list.size() == 1 && !used[list[0]]) out.push_back(walk(edge, list[0]));
    }
    for (const auto& [edge, list] : incident) {
        for (std::size_t s : list) {
            if (!used[s]) out.push_back(walk(edge, s));
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].id = id_prefix + "." + std::to_string(i);
    }
    return out;
}

std::vector<double> default_levels(const HamiltonianModel& model) {
    double unit = model.eps() * model.mu() * model.critical_radius() * model.critical_radius();
    std::vector<double> levels{0.0};
    for (double f : {0.5, 1.0, 2.0, 4.0}) {
        levels.push_back(-f * unit);
        levels.push_back(f * unit);
    }
    return levels;
}

std::vector<Polyline> export_level_sets(const HamiltonianModel& model, const Box& box, int resolution) {
    std::vector<Polyline> out;
    auto levels = default_levels(model);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        auto lines = contour([&model](Vec2 p) { return model.value(p); }, levels[i], box, resolution,
                             "H" + std::to_string(i));
        out.insert(out.end(), lines.begin(), lines.end());
    }
    return out;
}

std::vector<Polyline> export_kernel_foliation(const ReebSystem& sys, const Box& box, int resolution) {
    std::vector<Polyline> out;
    if (box.empty() || resolution <= 0) return out;
    const auto& model = sys.model();
    std::vector<Vec2> centres{{0.0, 0.0}};
    for (const auto& s : sys.saddles()) centres.push_back(s.point);
    const double width = 0.35 * model.critical_radius();

    // Inside a closed-form region the primitive is a multiple of r^2 d(theta) about the region
    // centre, so its kernel is exactly radial there.
    auto radial_from = [](Vec2 x, Vec2 c) {
        Vec2 u = x - c;
        double len = u.norm();
        return len > 0.0 ? (1.0 / len) * u : Vec2{0.0, 0.0};
    };
    // Elsewhere: gradient of -log sum exp(-|x - c|^2 / 2w^2), pointing away from the nearest centre.
    auto direction = [&](Vec2 x) {
        if (x.norm() <= model.core_radius() || x.norm() >= model.exterior_radius()) return radial_from(x, {0.0, 0.0});
        for (const auto& chart : sys.charts()) {
            if (chart.contains(x)) return radial_from(x, chart.center);
        }
        double dmin = std::numeric_limits<double>::infinity();
        std::vector<double> d(centres.size());
        for (std::size_t i = 0; i < centres.size(); ++i) {
            Vec2 u = x - centres[i];
            d[i] = dot(u, u) / (2.0 * width * width);
            dmin = std::min(dmin, d[i]);
        }
        Vec2 mean{0.0, 0.0};
        double total = 0.0;
        for (std::size_t i = 0; i < centres.size(); ++i) {
            double w = std::exp(-(d[i] - dmin));
            mean = mean + w * centres[i];
            total += w;
        }
        Vec2 g = x - (1.0 / total) * mean;
        double len = g.norm();
        return len > 0.0 ? (1.0 / len) * g : Vec2{0.0, 0.0};
    };

    const double step = std::min(box.xmax - box.xmin, box.ymax - box.ymin) / resolution;
    const int rays = std::max(4, resolution / 8);
    const int max_steps = 4 * resolution;
    int id = 0;
    for (std::size_t ci = 0; ci < centres.size(); ++ci) {
        for (int j = 0; j < rays; ++j) {
            double ang = 2.0 * std::numbers::pi * (j + 0.5) / rays;
            Vec2 p = centres[ci] + polar(0.5 * step, ang);
            if (!box.contains(p)) continue;
            Polyline line;
            line.id = "K" + std::to_string(ci) + "." + std::to_string(id++);
            line.points.push_back(p);
            for (int s = 0; s < max_steps; ++s) {
                Vec2 k1 = direction(p);
                Vec2 k2 = direction(p + (0.5 * step) * k1);
                Vec2 k3 = direction(p + (0.5 * step) * k2);
                Vec2 k4 = direction(p + step * k3);
                Vec2 next = p + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                if (!box.contains(next) || (next - p).norm() < 1e-3 * step) break;
                p = next;
                line.points.push_back(p);
            }
            if (line.points.size() >= 2) out.push_back(std::move(line));
        }
    }
    return out;
}

FoliationExport export_foliation(const ReebSystem& sys, int resolution, const Box& box) {
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    return {export_level_sets(sys.model(), box, resolution), export_kernel_foliation(sys, box, resolution)};
}

std::string format_polylines(const std::vector<Polyline>& lines) {
    std::string out;
    char buf[64];
    for (const auto& line : lines) {
        out += line.id;
        out += line.closed ? " 1" : " 0";
        for (const auto& p : line.points) {
            std::snprintf(buf, sizeof buf, " %.9f,%.9f", p.x, p.y);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::vector<Polyline> parse_polylines(const std::string& text) {
    std::vector<Polyline> out;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty()) continue;
        std::istringstream fields(row);
        Polyline line;
        int closed = 0;
        if (!(fields >> line.id >> closed) || (closed != 0 && closed != 1)) {
            throw std::invalid_argument("malformed polyline record");
        }
        line.closed = closed != 0;
        std::string pt;
        while (fields >> pt) {
            auto comma = pt.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("malformed point '" + pt + "'");
            line.points.push_back({std::stod(pt.substr(0, comma)), std::stod(pt.substr(comma + 1))});
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace sutured::dynamics
