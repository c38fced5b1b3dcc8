// models.hpp — exact reduced dynamics of the two decoherence channels: damped
// Jaynes-Cummings amplitude damping with a time-dependent rate, and
// Ohmic-family pure dephasing. Both expose the evolved state, the generator,
// and the scalar decay signals consumed by the speed-limit engine.

#pragma once

#include <array>
#include <optional>
#include <variant>

#include "qsl/quadrature.hpp"
#include "qsl/qubit.hpp"

namespace qsl {

// Qubit resonantly coupled to a leaky cavity mode with a Lorentzian spectral
// density of width lambda and coupling strength gamma0. Weak coupling
// (lambda > 2 gamma0) decays monotonically; strong coupling oscillates.
struct DampedJCParams {
    double gamma0 = 0.1;
    double lambda = 1.0;
    // Qubit frequency; stored for configuration fidelity but inert in the
    // resonant reduced dynamics.
    double omega0 = 1.0;

    void validate() const;  // gamma0 > 0 and lambda > 0
};

// exact: the full time-dependent decay rate of the Lorentzian environment.
// ideal_markov: constant rate gamma0, the textbook weak-coupling limit.
enum class JcMode { exact, ideal_markov };

// Ohmic-family environment J(w) = eta w^s / w_c^{s-1} exp(-w / w_c) at zero
// temperature. kappa rescales the decoherence exponent; kappa = 1 matches the
// spectral integral of J, kappa = 2 reproduces the doubled s = 1 convention
// found in parts of the literature.
struct OhmicParams {
    double eta = 1.0;
    double s = 1.0;
    double omega_c = 1.0;
    double kappa = 1.0;

    void validate() const;  // all fields > 0
};

// ---------------------------------------------------------------- damped JC

// Excited-state survival signals at one instant: population = amplitude^2.
// The amplitude pair stays finite at strong-coupling population zeros where
// the decay rate diverges.
struct JcSignals {
    double population;
    double population_dot;
    double amplitude;
    double amplitude_dot;
};

JcSignals jc_signals(const DampedJCParams& p, JcMode mode, double t);

// Time-dependent decay rate gamma_t; nullopt at strong-coupling poles, where
// the denominator magnitude drops below 1e-14.
std::optional<double> jc_decay_rate(const DampedJCParams& p, double t);

// p_t = exp(-int_0^t gamma), evaluated from the overflow-free closed form.
double jc_population(const DampedJCParams& p, double t);

// Analytic dp_t/dt; equals -gamma_t p_t wherever gamma_t is finite and stays
// finite at the population zeros.
double jc_population_derivative(const DampedJCParams& p, double t);

DensityMatrix2 jc_state(const DampedJCParams& p, const BlochVector& v0, double t);

// L_t(rho) = gamma_t (sigma_- rho sigma_+ - {sigma_+ sigma_-, rho} / 2);
// nullopt propagates the rate pole.
std::optional<Operator2> jc_generator(const DampedJCParams& p, const DensityMatrix2& rho,
                                      double t);

// ------------------------------------------------------- Ohmic dephasing

double ohmic_spectral_density(const OhmicParams& p, double omega);

// Accumulated decoherence exponent Gamma(t) = eta kappa Phi(t, s) with
//   Phi = Gamma_E(s-1) [1 - cos((s-1) arctan(w_c t)) (1 + w_c^2 t^2)^{(1-s)/2}]
// and the continuous limit Phi(t, 1) = ln(1 + w_c^2 t^2) / 2. Near s = 1 the
// Euler Gamma pole cancels against the bracket and Phi is evaluated by series.
double dephasing_exponent(const OhmicParams& p, double t);

// Zero-temperature integral int_0^inf J(w) (1 - cos wt) / w^2 dw by
// semi-infinite quadrature; the independent route pinning dephasing_exponent
// at kappa = 1.
double dephasing_exponent_by_quadrature(const OhmicParams& p, double t,
                                        const QuadratureSpec& spec = {});

// q_t = exp(-Gamma(t)) in (0, 1].
double dephasing_coherence_factor(const OhmicParams& p, double t);

// Instantaneous rate d Gamma / dt, the Lindblad coefficient that makes
// d rho_t / dt = L_t(rho_t) hold for the dephasing state below:
//   eta kappa w_c Gamma_E(s) sin(s arctan(w_c t)) (1 + w_c^2 t^2)^{-s/2}.
// Nonnegative for s <= 2; changes sign at late times for larger s.
double dephasing_rate(const OhmicParams& p, double t);

DensityMatrix2 dephasing_state(const OhmicParams& p, const BlochVector& v0, double t);

// L_t(rho) = rate (sigma_z rho sigma_z - rho) / 2
Operator2 dephasing_generator(const OhmicParams& p, const DensityMatrix2& rho, double t);

// ------------------------------------------------------------ channel handle

// Uniform interface over the two dynamics for the speed-limit engine and the
// scan front end.
class ChannelModel {
public:
    static ChannelModel damped_jc(const DampedJCParams& p, JcMode mode = JcMode::exact);
    static ChannelModel ohmic_dephasing(const OhmicParams& p);

    DensityMatrix2 state(const BlochVector& v0, double t) const;

    // Generic generator route; used by consistency checks away from poles.
    std::optional<Operator2> generator(const DensityMatrix2& rho, double t) const;

    // Scalar decay signal: p_t for the JC channel, q_t for dephasing.
    double signal(double t) const;

    // Descending singular values of L_t(rho_t) along the trajectory started
    // from v0, computed from the pole-free closed forms (|dp/dt|-based for JC,
    // |dq/dt|-based for dephasing).
    std::array<double, 2> generator_singular_values(const BlochVector& v0, double t) const;

    bool is_damped_jc() const noexcept;
    bool is_ideal_markov() const noexcept;
    const DampedJCParams* jc_params() const noexcept;     // null for dephasing
    const OhmicParams* ohmic_params() const noexcept;     // null for JC

private:
    struct Jc {
        DampedJCParams params;
        JcMode mode;
    };
    struct Dephasing {
        OhmicParams params;
    };

    explicit ChannelModel(std::variant<Jc, Dephasing> kind);

    std::variant<Jc, Dephasing> kind_;
};

}  // namespace qsl
