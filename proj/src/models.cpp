#include "qsl/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsl {

void DampedJCParams::validate() const {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw std::invalid_argument("DampedJCParams: gamma0 must be > 0");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("DampedJCParams: lambda must be > 0");
    }
    if (!std::isfinite(omega0)) {
        throw std::invalid_argument("DampedJCParams: omega0 must be finite");
    }
}

void OhmicParams::validate() const {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("OhmicParams: eta must be > 0");
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("OhmicParams: s must be > 0");
    }
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("OhmicParams: omega_c must be > 0");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("OhmicParams: kappa must be > 0");
    }
}

namespace {

constexpr double kPoleTol = 1e-14;
// Window around s = 1 where the exponent switches to the series evaluation.
constexpr double kOhmicSeriesWindow = 1e-4;

void require_nonnegative_time(double t, const char* where) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument(std::string(where) + ": t must be >= 0");
    }
}

enum class JcCoupling { weak, strong, critical };

// d^2 = lambda^2 - 2 gamma0 lambda selects the branch; |d| < 1e-9 lambda is
// treated as critical to dodge cancellation at the boundary.
JcCoupling jc_coupling(const DampedJCParams& p, double& d_abs) {
    const double disc = p.lambda * (p.lambda - 2.0 * p.gamma0);
    const double degenerate = 1e-9 * p.lambda;
    if (std::abs(disc) < degenerate * degenerate) {
        d_abs = 0.0;
        return JcCoupling::critical;
    }
    d_abs = std::sqrt(std::abs(disc));
    return disc > 0.0 ? JcCoupling::weak : JcCoupling::strong;
}

// Survival amplitude G(t) = e^{-lambda t / 2} u(t) and its derivative. The
// weak branch is assembled from the two sub-exponentials exp(-(lambda -+ d)t/2)
// whose exponents are both nonpositive, so no intermediate overflows.
void jc_amplitude(const DampedJCParams& p, double t, double& amp, double& amp_dot) {
    double d = 0.0;
    switch (jc_coupling(p, d)) {
        case JcCoupling::weak: {
            const double ea = std::exp(-0.5 * (p.lambda - d) * t);
            const double eb = std::exp(-0.5 * (p.lambda + d) * t);
            const double diff = eb * std::expm1(d * t);  // e^a - e^b, stable for small d t
            amp = 0.5 * (ea + eb) + 0.5 * (p.lambda / d) * diff;
            amp_dot = -0.5 * (p.gamma0 * p.lambda / d) * diff;
            return;
        }
        case JcCoupling::strong: {
            const double envelope = std::exp(-0.5 * p.lambda * t);
            const double cs = std::cos(0.5 * d * t);
            const double sn = std::sin(0.5 * d * t);
            amp = envelope * (cs + (p.lambda / d) * sn);
            amp_dot = -envelope * (p.gamma0 * p.lambda / d) * sn;
            return;
        }
        case JcCoupling::critical: {
            const double envelope = std::exp(-0.5 * p.lambda * t);
            amp = envelope * (1.0 + 0.5 * p.lambda * t);
            amp_dot = -envelope * 0.25 * p.lambda * p.lambda * t;
            return;
        }
    }
}

DensityMatrix2 damped_state(const BlochVector& v0, double population) {
    const double root = std::sqrt(population);
    const double excited = 0.5 * (1.0 - v0.vz()) * population;
    const complex off(0.5 * v0.vx() * root, -0.5 * v0.vy() * root);
    return {complex(1.0 - excited, 0.0), off, std::conj(off), complex(excited, 0.0)};
}

Operator2 amplitude_damping_action(double rate, const DensityMatrix2& rho) {
    return {rate * rho.m11(), -0.5 * rate * rho.m01(), -0.5 * rate * rho.m10(),
            -rate * rho.m11()};
}

Operator2 dephasing_action(double rate, const DensityMatrix2& rho) {
    return {complex(0.0, 0.0), -rate * rho.m01(), -rate * rho.m10(), complex(0.0, 0.0)};
}

}  // namespace

JcSignals jc_signals(const DampedJCParams& p, JcMode mode, double t) {
    p.validate();
    require_nonnegative_time(t, "jc_signals");
    if (mode == JcMode::ideal_markov) {
        const double amp = std::exp(-0.5 * p.gamma0 * t);
        const double pop = amp * amp;
        return {pop, -p.gamma0 * pop, amp, -0.5 * p.gamma0 * amp};
    }
    double amp = 0.0;
    double amp_dot = 0.0;
    jc_amplitude(p, t, amp, amp_dot);
    const double pop = std::fmin(amp * amp, 1.0);
    return {pop, 2.0 * amp * amp_dot, amp, amp_dot};
}

std::optional<double> jc_decay_rate(const DampedJCParams& p, double t) {
    p.validate();
    require_nonnegative_time(t, "jc_decay_rate");
    double d = 0.0;
    switch (jc_coupling(p, d)) {
        case JcCoupling::weak: {
            const double th = std::tanh(0.5 * d * t);
            return 2.0 * p.gamma0 * p.lambda * th / (d + p.lambda * th);
        }
        case JcCoupling::strong: {
            const double cs = std::cos(0.5 * d * t);
            const double sn = std::sin(0.5 * d * t);
            const double denom = d * cs + p.lambda * sn;
            if (std::abs(denom) < kPoleTol) return std::nullopt;
            return 2.0 * p.gamma0 * p.lambda * sn / denom;
        }
        case JcCoupling::critical:
            return p.gamma0 * p.lambda * t / (1.0 + 0.5 * p.lambda * t);
    }
    return std::nullopt;  // unreachable
}

double jc_population(const DampedJCParams& p, double t) {
    return jc_signals(p, JcMode::exact, t).population;
}

double jc_population_derivative(const DampedJCParams& p, double t) {
    return jc_signals(p, JcMode::exact, t).population_dot;
}

DensityMatrix2 jc_state(const DampedJCParams& p, const BlochVector& v0, double t) {
    return damped_state(v0, jc_population(p, t));
}

std::optional<Operator2> jc_generator(const DampedJCParams& p, const DensityMatrix2& rho,
                                      double t) {
    const auto rate = jc_decay_rate(p, t);
    if (!rate) return std::nullopt;
    return amplitude_damping_action(*rate, rho);
}

double ohmic_spectral_density(const OhmicParams& p, double omega) {
    p.validate();
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("ohmic_spectral_density: omega must be >= 0");
    }
    const double x = omega / p.omega_c;
    return p.eta * p.omega_c * std::pow(x, p.s) * std::exp(-x);
}

double dephasing_exponent(const OhmicParams& p, double t) {
    p.validate();
    require_nonnegative_time(t, "dephasing_exponent");
    const double x = p.omega_c * t;
    const double theta = std::atan(x);
    const double lg = std::log1p(x * x);
    const double eps = p.s - 1.0;

    double phi;
    if (std::abs(eps) < kOhmicSeriesWindow) {
        // Gamma(s-1) pole cancels against the bracket; expand around s = 1.
        constexpr double euler = std::numbers::egamma;
        constexpr double c2 = 0.5 * euler * euler + std::numbers::pi * std::numbers::pi / 12.0;
        const double a0 = 0.5 * lg;
        const double a1 = 0.5 * theta * theta - 0.125 * lg * lg - 0.5 * euler * lg;
        const double a2 = lg * lg * lg / 48.0 - 0.25 * theta * theta * lg -
                          euler * (0.5 * theta * theta - 0.125 * lg * lg) + 0.5 * c2 * lg;
        phi = a0 + eps * (a1 + eps * a2);
    } else {
        phi = std::tgamma(eps) * (1.0 - std::cos(eps * theta) * std::exp(-0.5 * eps * lg));
    }
    return p.eta * p.kappa * phi;
}

double dephasing_exponent_by_quadrature(const OhmicParams& p, double t,
                                        const QuadratureSpec& spec) {
    p.validate();
    require_nonnegative_time(t, "dephasing_exponent_by_quadrature");
    if (t == 0.0) return 0.0;
    const auto integrand = [&p, t](double w) {
        const double half_osc = std::sin(0.5 * w * t);
        return ohmic_spectral_density(p, w) * 2.0 * half_osc * half_osc / (w * w);
    };
    // decay scale 2 w_c keeps J(w) e^{w / scale} bounded for every s > 0
    return integrate_semi_infinite(integrand, 2.0 * p.omega_c, spec);
}

double dephasing_coherence_factor(const OhmicParams& p, double t) {
    return std::exp(-dephasing_exponent(p, t));
}

double dephasing_rate(const OhmicParams& p, double t) {
    p.validate();
    require_nonnegative_time(t, "dephasing_rate");
    const double x = p.omega_c * t;
    const double theta = std::atan(x);
    return p.eta * p.kappa * p.omega_c * std::tgamma(p.s) * std::sin(p.s * theta) *
           std::exp(-0.5 * p.s * std::log1p(x * x));
}

DensityMatrix2 dephasing_state(const OhmicParams& p, const BlochVector& v0, double t) {
    const double q = dephasing_coherence_factor(p, t);
    const complex off(0.5 * v0.vx() * q, -0.5 * v0.vy() * q);
    return {complex(0.5 * (1.0 + v0.vz()), 0.0), off, std::conj(off),
            complex(0.5 * (1.0 - v0.vz()), 0.0)};
}

Operator2 dephasing_generator(const OhmicParams& p, const DensityMatrix2& rho, double t) {
    return dephasing_action(dephasing_rate(p, t), rho);
}

ChannelModel::ChannelModel(std::variant<Jc, Dephasing> kind) : kind_(std::move(kind)) {}

ChannelModel ChannelModel::damped_jc(const DampedJCParams& p, JcMode mode) {
    p.validate();
    return ChannelModel(Jc{p, mode});
}

ChannelModel ChannelModel::ohmic_dephasing(const OhmicParams& p) {
    p.validate();
    return ChannelModel(Dephasing{p});
}

DensityMatrix2 ChannelModel::state(const BlochVector& v0, double t) const {
    return std::visit(
        [&](const auto& kind) -> DensityMatrix2 {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, Jc>) {
                return damped_state(v0, jc_signals(kind.params, kind.mode, t).population);
            } else {
                return dephasing_state(kind.params, v0, t);
            }
        },
        kind_);
}

std::optional<Operator2> ChannelModel::generator(const DensityMatrix2& rho, double t) const {
    return std::visit(
        [&](const auto& kind) -> std::optional<Operator2> {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, Jc>) {
                if (kind.mode == JcMode::ideal_markov) {
                    return amplitude_damping_action(kind.params.gamma0, rho);
                }
                return jc_generator(kind.params, rho, t);
            } else {
                return dephasing_generator(kind.params, rho, t);
            }
        },
        kind_);
}

double ChannelModel::signal(double t) const {
    return std::visit(
        [&](const auto& kind) -> double {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, Jc>) {
                return jc_signals(kind.params, kind.mode, t).population;
            } else {
                return dephasing_coherence_factor(kind.params, t);
            }
        },
        kind_);
}

std::array<double, 2> ChannelModel::generator_singular_values(const BlochVector& v0,
                                                              double t) const {
    const double coh = coherence(v0);
    return std::visit(
        [&](const auto& kind) -> std::array<double, 2> {
            using T = std::decay_t<decltype(kind)>;
            double sv = 0.0;
            if constexpr (std::is_same_v<T, Jc>) {
                // L_t(rho_t) is Hermitian and traceless with eigenvalues
                // +-sqrt(a^2 + |b|^2): a = -p_dot (1 - v_z)/2, |b| from the
                // off-diagonal derivative; finite at rate poles.
                const JcSignals sig = jc_signals(kind.params, kind.mode, t);
                const double diag = sig.population_dot * (1.0 - v0.vz());
                sv = 0.5 * std::sqrt(diag * diag + coh * sig.amplitude_dot * sig.amplitude_dot);
            } else {
                const double q = dephasing_coherence_factor(kind.params, t);
                const double q_dot = -dephasing_rate(kind.params, t) * q;
                sv = 0.5 * std::abs(q_dot) * std::sqrt(coh);
            }
            return {sv, sv};
        },
        kind_);
}

bool ChannelModel::is_damped_jc() const noexcept { return std::holds_alternative<Jc>(kind_); }

bool ChannelModel::is_ideal_markov() const noexcept {
    const auto* jc = std::get_if<Jc>(&kind_);
    return jc != nullptr && jc->mode == JcMode::ideal_markov;
}

const DampedJCParams* ChannelModel::jc_params() const noexcept {
    const auto* jc = std::get_if<Jc>(&kind_);
    return jc != nullptr ? &jc->params : nullptr;
}

const OhmicParams* ChannelModel::ohmic_params() const noexcept {
    const auto* deph = std::get_if<Dephasing>(&kind_);
    return deph != nullptr ? &deph->params : nullptr;
}

}  // namespace qsl
