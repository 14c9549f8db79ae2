#include "sutured/dynamics/geometry.hpp"

namespace sutured::dynamics {

std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Mat2& m) {
    double half_tr = 0.5 * m.trace();
    double disc = half_tr * half_tr - m.det();
    if (disc >= 0.0) {
        double root = std::sqrt(disc);
        // Avoid cancellation for the smaller root.
        double big = half_tr >= 0.0 ? half_tr + root : half_tr - root;
        double small = big != 0.0 ? m.det() / big : 0.0;
        if (std::abs(big) < std::abs(small)) std::swap(big, small);
        return {big, small};
    }
    double im = std::sqrt(-disc);
    return {{half_tr, im}, {half_tr, -im}};
}

Vec2 real_eigenvector(const Mat2& m, double lambda) {
    // Rows of (m - lambda I) are orthogonal to the eigenvector; use the larger one.
    Vec2 r1{m.a - lambda, m.b};
    Vec2 r2{m.c, m.d - lambda};
    Vec2 r = r1.norm() >= r2.norm() ? r1 : r2;
    Vec2 v{-r.y, r.x};
    double len = v.norm();
    if (len == 0.0) return {1.0, 0.0};
    return (1.0 / len) * v;
}

}  // namespace sutured::dynamics
