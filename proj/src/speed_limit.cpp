#include "qsl/speed_limit.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl {

namespace {

// Below this, numerator and d_ml are treated as a frozen 0/0 window.
constexpr double kDegenerateTol = 1e-14;

void require_window(double tau, double tau_d, const char* where) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument(std::string(where) + ": tau must be >= 0");
    }
    if (!(tau_d > 0.0) || !std::isfinite(tau_d)) {
        throw std::invalid_argument(std::string(where) + ": tau_d must be > 0");
    }
}

double window_average(const std::function<double(double)>& f, double tau, double tau_d,
                      const QuadratureSpec& spec) {
    return integrate(f, tau, tau + tau_d, spec) / tau_d;
}

}  // namespace

SpeedLimitReport qsl_unified(const ChannelModel& model, const BlochVector& v0, double tau,
                             double tau_d, const QuadratureSpec& spec) {
    require_window(tau, tau_d, "qsl_unified");

    const DensityMatrix2 rho_start = model.state(v0, tau);
    const DensityMatrix2 rho_end = model.state(v0, tau + tau_d);
    const auto weights = singular_values(rho_start.as_operator());

    SpeedLimitReport report;
    report.tau = tau;
    report.tau_d = tau_d;
    report.numerator = std::abs(trace_product(rho_end, rho_start) - purity(rho_start));
    report.d_ml = window_average(
        [&](double t) {
            const auto sv = model.generator_singular_values(v0, t);
            return sv[0] * weights[0] + sv[1] * weights[1];
        },
        tau, tau_d, spec);
    report.d_ml_loose = window_average(
        [&](double t) {
            const auto sv = model.generator_singular_values(v0, t);
            return sv[0] + sv[1];
        },
        tau, tau_d, spec);
    report.d_mt = window_average(
        [&](double t) {
            const auto sv = model.generator_singular_values(v0, t);
            return std::hypot(sv[0], sv[1]);
        },
        tau, tau_d, spec);

    report.degenerate = report.numerator < kDegenerateTol && report.d_ml < kDegenerateTol;
    report.dominant = report.d_ml <= report.d_mt ? Bound::ML : Bound::MT;
    report.tau_qsl =
        report.degenerate ? 0.0 : report.numerator / std::fmin(report.d_ml, report.d_mt);
    return report;
}

std::pair<double, double> qsl_ml_variant(const ChannelModel& model, const BlochVector& v0,
                                         double tau, double tau_d, const QuadratureSpec& spec) {
    const SpeedLimitReport report = qsl_unified(model, v0, tau, tau_d, spec);
    if (report.degenerate) return {0.0, 0.0};
    return {report.numerator / report.d_ml, report.numerator / report.d_ml_loose};
}

double qsl_jc_closed(const DampedJCParams& p, double tau, double tau_d,
                     const QuadratureSpec& spec) {
    p.validate();
    require_window(tau, tau_d, "qsl_jc_closed");
    const double pop_start = jc_population(p, tau);
    const double pop_end = jc_population(p, tau + tau_d);
    const double numerator = std::abs((pop_start - pop_end) * (1.0 - 2.0 * pop_start));
    const double mean_rate = window_average(
        [&p](double t) { return std::abs(jc_population_derivative(p, t)); }, tau, tau_d, spec);
    if (numerator < kDegenerateTol && mean_rate < kDegenerateTol) return 0.0;
    return numerator / mean_rate;
}

double qsl_markov_jc(double gamma0, double tau, double tau_d) {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw std::invalid_argument("qsl_markov_jc: gamma0 must be > 0");
    }
    require_window(tau, tau_d, "qsl_markov_jc");
    return tau_d * std::abs(1.0 - 2.0 * std::exp(-gamma0 * tau));
}

double qsl_dephasing_closed(const OhmicParams& p, double coh, double tau, double tau_d,
                            const QuadratureSpec& spec) {
    p.validate();
    require_window(tau, tau_d, "qsl_dephasing_closed");
    if (!(coh >= 0.0) || coh > 1.0 + kValidationSlack) {
        throw std::invalid_argument("qsl_dephasing_closed: coherence must lie in [0, 1]");
    }
    const double q_start = dephasing_coherence_factor(p, tau);
    const double q_end = dephasing_coherence_factor(p, tau + tau_d);
    const double numerator = std::sqrt(coh) * std::abs(q_start * q_end - q_start * q_start);
    const double mean_rate = window_average(
        [&p](double t) {
            return std::abs(dephasing_rate(p, t)) * dephasing_coherence_factor(p, t);
        },
        tau, tau_d, spec);
    if (numerator < kDegenerateTol && mean_rate < kDegenerateTol) return 0.0;
    return numerator / mean_rate;
}

}  // namespace qsl
