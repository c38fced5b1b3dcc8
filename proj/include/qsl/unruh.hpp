// unruh.hpp — initial-state map seen by a uniformly accelerated observer and
// its composition with the speed-limit engine.

#pragma once

#include "qsl/speed_limit.hpp"

namespace qsl {

struct UnruhParams {
    double acceleration = 1.0;
    double varpi = 1.0;  // central frequency of the fermion wave packet
    double c = 1.0;      // speed of light; natural units by default

    void validate() const;  // all fields > 0
};

// cos r = (exp(-2 pi varpi c / a) + 1)^{-1/2}, in (1/sqrt(2), 1); decreasing
// in a, increasing in varpi and c.
double cos_r(const UnruhParams& p);

// (v_x cos r, v_y cos r, (1 + v_z) cos^2 r - 1): scales the transverse
// components by a common factor and maps the output coherence to
// cos^2 r (v_x^2 + v_y^2) and the excited population to
// 1 - (1 + v_z) cos^2 r / 2. Preserves the Bloch ball.
BlochVector transform_initial_state(const BlochVector& v, const UnruhParams& p);

// qsl_unified on the transformed initial state; no other physics added.
SpeedLimitReport qsl_in_accelerated_frame(const ChannelModel& model, const BlochVector& v0,
                                          const UnruhParams& p, double tau, double tau_d,
                                          const QuadratureSpec& spec = {});

}  // namespace qsl
