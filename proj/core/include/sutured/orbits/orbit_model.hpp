#pragma once

#include "sutured/linalg/rational.hpp"
#include "sutured/orbits/torus_params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sutured::orbits {

enum class OrbitKind { CentralElliptic, SaddleHyperbolic };

enum class OrbitType { Elliptic, PositiveHyperbolic, NegativeHyperbolic };

// A closed orbit: the central elliptic orbit covered t times, or saddle orbit i covered s times.
struct ReebOrbit {
    OrbitKind kind = OrbitKind::CentralElliptic;
    std::int64_t saddle_index = 0;  // 1..n for saddles, 0 for the central orbit
    std::int64_t multiplicity = 1;

    static ReebOrbit central(std::int64_t t);
    static ReebOrbit saddle(std::int64_t i, std::int64_t s);

    bool is_central() const { return kind == OrbitKind::CentralElliptic; }
    std::string label() const;

    friend bool operator==(const ReebOrbit&, const ReebOrbit&) = default;
};

struct OrbitInvariants {
    std::int64_t homology_class = 0;
    std::int64_t cz_index = 0;
    std::int64_t grading = 0;
    Rational action;
    bool is_good = true;
    OrbitType type = OrbitType::Elliptic;
};

const char* to_string(OrbitType type);

// x when x is an integer, floor(x) otherwise: floor(x + d) for infinitesimal d > 0.
std::int64_t floor_plus(const Rational& x);

// Throws std::invalid_argument if the orbit does not belong to the model.
void check_orbit(const TorusParams& p, const ReebOrbit& o);

std::int64_t homology_class(const TorusParams& p, const ReebOrbit& o);

// In explicit delta mode throws std::out_of_range when the class exceeds the horizon N_delta.
std::int64_t cz_index(const TorusParams& p, const ReebOrbit& o);
std::int64_t grading(const TorusParams& p, const ReebOrbit& o);
Rational action(const TorusParams& p, const ReebOrbit& o);

OrbitType orbit_type(const TorusParams& p, const ReebOrbit& o);
bool is_good(const ReebOrbit& o, OrbitType underlying);

OrbitInvariants invariants(const TorusParams& p, const ReebOrbit& o);

// Generators in class h: elliptic first, then saddles by ascending index.
std::vector<ReebOrbit> enumerate_generators(const TorusParams& p, std::int64_t h);

}  // namespace sutured::orbits
