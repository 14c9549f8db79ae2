#include "sutured/orbits/torus_params.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace sutured::orbits {

std::int64_t delta_horizon(const Rational& delta, std::int64_t abs_k) {
    // m * delta < 1/|k|  <=>  m < 1/(|k| delta); largest such m is ceil(x) - 1.
    Rational x = Rational(1) / (Rational(abs_k) * delta);
    linalg::Integer fl = x.floor();
    linalg::Integer m = x.is_integer() ? linalg::Integer(fl - 1) : fl;
    if (m > std::numeric_limits<std::int64_t>::max()) {
        return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(m);
}

TorusParams::TorusParams(std::int64_t n, std::int64_t k, std::int64_t l,
                         Rational half_length, Rational elliptic_surplus, DeltaMode mode)
    : n_(n), k_(k), l_(l),
      half_length_(std::move(half_length)),
      elliptic_surplus_(std::move(elliptic_surplus)),
      mode_(std::move(mode)) {
    if (n_ < 1) {
        throw InvalidParameters("n must be at least 1");
    }
    if (k_ > -2 && k_ < 2) {
        throw InvalidParameters("|k| must be at least 2");
    }
    if (l_ < 1) {
        throw InvalidParameters("l must be positive");
    }
    if (l_ >= abs_k()) {
        throw InvalidParameters("l must be less than |k|");
    }
    if (std::gcd(abs_k(), l_) != 1) {
        throw InvalidParameters("gcd(|k|,l) must be 1");
    }
    if (half_length_.sign() <= 0) {
        throw InvalidParameters("N must be positive");
    }
    if (elliptic_surplus_.sign() <= 0) {
        throw InvalidParameters("epsC must be positive");
    }
    if (const auto* ex = std::get_if<ExplicitDelta>(&mode_)) {
        if (ex->delta.sign() <= 0) {
            throw InvalidParameters("delta must be positive");
        }
        if (ex->delta * Rational(abs_k()) >= Rational(1)) {
            throw InvalidParameters("delta must be less than 1/|k|");
        }
        n_delta_ = delta_horizon(ex->delta, abs_k());
    }
}

TorusParams TorusParams::with_mode(DeltaMode mode) const {
    return TorusParams(n_, k_, l_, half_length_, elliptic_surplus_, std::move(mode));
}

TorusParams TorusParams::with_k(std::int64_t k) const {
    return TorusParams(n_, k, l_, half_length_, elliptic_surplus_, mode_);
}

std::string TorusParams::describe() const {
    std::ostringstream os;
    os << "n=" << n_ << " k=" << k_ << " l=" << l_
       << " N=" << half_length_.to_string()
       << " epsC=" << elliptic_surplus_.to_string();
    if (const auto* ex = std::get_if<ExplicitDelta>(&mode_)) {
        os << " delta=" << ex->delta.to_string();
    } else {
        os << " delta=0+";
    }
    return os.str();
}

}  // namespace sutured::orbits
