#pragma once

#include "sutured/dynamics/geometry.hpp"
#include "sutured/dynamics/setup.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sutured::dynamics {

struct Polyline {
    std::string id;
    bool closed = false;
    std::vector<Vec2> points;

    friend bool operator==(const Polyline&, const Polyline&) = default;
};

struct Box {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    bool empty() const { return !(xmax > xmin && ymax > ymin); }
    bool contains(Vec2 p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
};

// Square of half-width 3 r_c around the origin.
Box default_box(const HamiltonianModel& model);

// Marching-squares contour of f = level on a resolution x resolution cell grid.
std::vector<Polyline> contour(const std::function<double(Vec2)>& f, double level, const Box& box,
                              int resolution, const std::string& id_prefix);

// 0 and +-{1/2, 1, 2, 4} * eps * mu * r_c^2.
std::vector<double> default_levels(const HamiltonianModel& model);

std::vector<Polyline> export_level_sets(const HamiltonianModel& model, const Box& box, int resolution);

// Leaves of ker(beta): radial rays out of the origin and each saddle, traced as streamlines of a
// smoothed distance-to-centres potential.
std::vector<Polyline> export_kernel_foliation(const ReebSystem& sys, const Box& box, int resolution);

struct FoliationExport {
    std::vector<Polyline> level_sets;
    std::vector<Polyline> kernel_curves;
};

// Throws std::invalid_argument if resolution <= 0.
FoliationExport export_foliation(const ReebSystem& sys, int resolution, const Box& box);

// One line per polyline: "<id> <closed 0|1> x,y x,y ...".
std::string format_polylines(const std::vector<Polyline>& lines);
std::vector<Polyline> parse_polylines(const std::string& text);

}  // namespace sutured::dynamics
