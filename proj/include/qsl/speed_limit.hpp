// speed_limit.hpp — the quantum-speed-limit engine: unified ML/MT bound for
// arbitrary mixed initial states plus the model-specific closed forms used as
// independent cross-checks.

#pragma once

#include <utility>

#include "qsl/models.hpp"

namespace qsl {

enum class Bound { ML, MT };

// One (tau, tau_d) evaluation of the unified bound. The three denominators
// are window averages over t in [tau, tau + tau_d] of functions of the
// generator singular values sigma_i(t):
//   d_ml       <sigma1 w1 + sigma2 w2>   (w_i: singular values of rho_tau,
//                                         descending pairing)
//   d_ml_loose <sigma1 + sigma2>
//   d_mt       <sqrt(sigma1^2 + sigma2^2)>
struct SpeedLimitReport {
    double tau = 0.0;
    double tau_d = 0.0;
    double numerator = 0.0;  // |tr(rho_{tau+tau_d} rho_tau) - tr(rho_tau^2)|
    double d_ml = 0.0;
    double d_ml_loose = 0.0;
    double d_mt = 0.0;
    double tau_qsl = 0.0;    // numerator * max(1/d_ml, 1/d_mt), 0 when degenerate
    Bound dominant = Bound::ML;
    // Frozen window: numerator and d_ml both below 1e-14. The bound is vacuous
    // and tau_qsl is reported as 0.
    bool degenerate = false;
};

SpeedLimitReport qsl_unified(const ChannelModel& model, const BlochVector& v0, double tau,
                             double tau_d, const QuadratureSpec& spec = {});

// Both ML candidates (numerator / d_ml, numerator / d_ml_loose); the first
// dominates since d_ml <= d_ml_loose.
std::pair<double, double> qsl_ml_variant(const ChannelModel& model, const BlochVector& v0,
                                         double tau, double tau_d,
                                         const QuadratureSpec& spec = {});

// Closed-form JC bound for the excited initial state (0, 0, -1):
//   |(p_tau - p_{tau+tau_d}) (1 - 2 p_tau)| / <|dp/dt|>.
double qsl_jc_closed(const DampedJCParams& p, double tau, double tau_d,
                     const QuadratureSpec& spec = {});

// Constant-rate simplification tau_d |1 - 2 exp(-gamma0 tau)|; vanishes at
// the critical time tau_c = ln(2) / gamma0.
double qsl_markov_jc(double gamma0, double tau, double tau_d);

// Closed-form dephasing bound, independent of v_z:
//   sqrt(coh) |q_tau q_{tau+tau_d} - q_tau^2| / <|dq/dt|>.
double qsl_dephasing_closed(const OhmicParams& p, double coh, double tau, double tau_d,
                            const QuadratureSpec& spec = {});

}  // namespace qsl
