// Shared helpers for the unit tests: seeded generators and a bisection
// root-finder used as an independent oracle.

#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "qsl/qubit.hpp"

namespace qsl::test {

inline BlochVector random_bloch(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        const double x = unit(rng);
        const double y = unit(rng);
        const double z = unit(rng);
        if (x * x + y * y + z * z <= 1.0) return {x, y, z};
    }
}

inline Operator2 random_operator(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto entry = [&rng, &unit] { return complex(unit(rng), unit(rng)); };
    return {entry(), entry(), entry(), entry()};
}

// Bisection to ~1e-13; pre: f(lo) and f(hi) bracket a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double f_lo = f(lo);
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if ((f_lo > 0.0) == (f_mid > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qsl::test
