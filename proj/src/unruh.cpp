#include "qsl/unruh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsl {

void UnruhParams::validate() const {
    if (!(acceleration > 0.0) || !std::isfinite(acceleration)) {
        throw std::invalid_argument("UnruhParams: acceleration must be > 0");
    }
    if (!(varpi > 0.0) || !std::isfinite(varpi)) {
        throw std::invalid_argument("UnruhParams: varpi must be > 0");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("UnruhParams: c must be > 0");
    }
}

double cos_r(const UnruhParams& p) {
    p.validate();
    const double exponent = -2.0 * std::numbers::pi * p.varpi * p.c / p.acceleration;
    return 1.0 / std::sqrt(std::exp(exponent) + 1.0);
}

BlochVector transform_initial_state(const BlochVector& v, const UnruhParams& p) {
    const double cr = cos_r(p);
    const double cr_sq = cr * cr;
    return {v.vx() * cr, v.vy() * cr, (1.0 + v.vz()) * cr_sq - 1.0};
}

SpeedLimitReport qsl_in_accelerated_frame(const ChannelModel& model, const BlochVector& v0,
                                          const UnruhParams& p, double tau, double tau_d,
                                          const QuadratureSpec& spec) {
    return qsl_unified(model, transform_initial_state(v0, p), tau, tau_d, spec);
}

}  // namespace qsl
