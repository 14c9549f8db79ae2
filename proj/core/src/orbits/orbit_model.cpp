#include "sutured/orbits/orbit_model.hpp"

#include <stdexcept>

namespace sutured::orbits {

ReebOrbit ReebOrbit::central(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("multiplicity must be at least 1");
    return ReebOrbit{OrbitKind::CentralElliptic, 0, t};
}

ReebOrbit ReebOrbit::saddle(std::int64_t i, std::int64_t s) {
    if (s < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (i < 1) throw std::invalid_argument("saddle index must be at least 1");
    return ReebOrbit{OrbitKind::SaddleHyperbolic, i, s};
}

std::string ReebOrbit::label() const {
    if (is_central()) {
        return "gamma^" + std::to_string(multiplicity);
    }
    return "gamma_" + std::to_string(saddle_index) + "^" + std::to_string(multiplicity);
}

const char* to_string(OrbitType type) {
    switch (type) {
        case OrbitType::Elliptic: return "elliptic";
        case OrbitType::PositiveHyperbolic: return "positive-hyperbolic";
        case OrbitType::NegativeHyperbolic: return "negative-hyperbolic";
    }
    return "unknown";
}

std::int64_t floor_plus(const Rational& x) {
    return static_cast<std::int64_t>(x.floor());
}

void check_orbit(const TorusParams& p, const ReebOrbit& o) {
    if (o.multiplicity < 1) {
        throw std::invalid_argument("orbit multiplicity must be at least 1");
    }
    if (o.is_central()) {
        if (o.saddle_index != 0) {
            throw std::invalid_argument("central orbit carries no saddle index");
        }
    } else if (o.saddle_index < 1 || o.saddle_index > p.n()) {
        throw std::invalid_argument("saddle index must lie in 1..n");
    }
}

std::int64_t homology_class(const TorusParams& p, const ReebOrbit& o) {
    check_orbit(p, o);
    return o.is_central() ? o.multiplicity : o.multiplicity * p.abs_k();
}

namespace {

void check_horizon(const TorusParams& p, const ReebOrbit& o) {
    auto horizon = p.n_delta();
    if (!horizon) return;
    std::int64_t h = homology_class(p, o);
    if (h > *horizon) {
        throw std::out_of_range("class " + std::to_string(h) + " of " + o.label() +
                                " exceeds N_delta = " + std::to_string(*horizon));
    }
}

}  // namespace

std::int64_t cz_index(const TorusParams& p, const ReebOrbit& o) {
    check_orbit(p, o);
    check_horizon(p, o);
    if (!o.is_central()) {
        return -p.sign_k() * 2 * p.l() * o.multiplicity;
    }
    // Rotation number of the central orbit is -l/k + delta.
    Rational base = Rational(-p.l()) / Rational(p.k());
    Rational t(o.multiplicity);
    if (const auto* ex = std::get_if<ExplicitDelta>(&p.delta_mode())) {
        Rational x = t * (base + ex->delta);
        return 2 * static_cast<std::int64_t>(x.floor()) + 1;
    }
    return 2 * floor_plus(t * base) + 1;
}

std::int64_t grading(const TorusParams& p, const ReebOrbit& o) {
    return cz_index(p, o) - 1;
}

Rational action(const TorusParams& p, const ReebOrbit& o) {
    check_orbit(p, o);
    Rational mult(o.multiplicity);
    if (o.is_central()) {
        return mult * (Rational(2) * p.half_length() + p.elliptic_surplus());
    }
    return mult * Rational(2) * p.half_length() * Rational(p.abs_k());
}

OrbitType orbit_type(const TorusParams& p, const ReebOrbit& o) {
    check_orbit(p, o);
    // Saddle monodromy is diag(L^|k|, L^-|k|) with L > 1.
    return o.is_central() ? OrbitType::Elliptic : OrbitType::PositiveHyperbolic;
}

bool is_good(const ReebOrbit& o, OrbitType underlying) {
    return !(underlying == OrbitType::NegativeHyperbolic && o.multiplicity % 2 == 0);
}

OrbitInvariants invariants(const TorusParams& p, const ReebOrbit& o) {
    OrbitInvariants inv;
    inv.homology_class = homology_class(p, o);
    inv.cz_index = cz_index(p, o);
    inv.grading = inv.cz_index - 1;
    inv.action = action(p, o);
    inv.type = orbit_type(p, o);
    inv.is_good = is_good(o, inv.type);
    return inv;
}

std::vector<ReebOrbit> enumerate_generators(const TorusParams& p, std::int64_t h) {
    if (h < 1) {
        throw std::invalid_argument("homology class h must be at least 1");
    }
    std::vector<ReebOrbit> gens{ReebOrbit::central(h)};
    if (h % p.abs_k() == 0) {
        std::int64_t s = h / p.abs_k();
        for (std::int64_t i = 1; i <= p.n(); ++i) {
            gens.push_back(ReebOrbit::saddle(i, s));
        }
    }
    return gens;
}

}  // namespace sutured::orbits
