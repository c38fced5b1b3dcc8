// quadrature.hpp — deterministic adaptive Gauss-Kronrod integration and
// finite-difference helpers.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace qsl {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 40;

    void validate() const;  // tolerances > 0, max_depth >= 1
};

// Raised when the adaptive refinement exhausts max_depth. Integration never
// returns a silently unconverged value.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& message) : std::runtime_error(message) {}
};

// Adaptive (G7, K15) integral of f over [a, b]. Bisection is depth-first and
// left-to-right, so identical inputs produce bit-identical results.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Integral of f over [0, inf) for integrands with an exponential envelope
// |f(w)| <= M exp(-w / decay_scale). Substitutes w = decay_scale * x, probes M
// on a fixed grid (with a 4x slack for inter-node peaks), and truncates at the
// x_max where the envelope tail M e^{-x_max} falls below half of abs_tol; the
// other half of the budget goes to the finite-interval rule.
double integrate_semi_infinite(const std::function<double(double)>& f, double decay_scale,
                               const QuadratureSpec& spec = {});

// (f(t+h) - f(t-h)) / (2h); exact for quadratics.
double central_derivative(const std::function<double(double)>& f, double t, double h);

}  // namespace qsl
