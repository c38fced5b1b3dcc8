#include "qsl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "qsl/models.hpp"
#include "qsl/speed_limit.hpp"
#include "qsl/unruh.hpp"

namespace qsl {

namespace {

double relative_dev(double value, double reference, double floor) {
    return std::abs(value - reference) / std::fmax(std::abs(reference), floor);
}

BlochVector random_bloch(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        const double x = unit(rng);
        const double y = unit(rng);
        const double z = unit(rng);
        if (x * x + y * y + z * z <= 1.0) return {x, y, z};
    }
}

Operator2 random_operator(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto entry = [&] { return complex(unit(rng), unit(rng)); };
    return {entry(), entry(), entry(), entry()};
}

complex trace_pair(const Operator2& a, const Operator2& b) {
    return a.m00 * b.m00 + a.m01 * b.m10 + a.m10 * b.m01 + a.m11 * b.m11;
}

double hs_norm_sq(const Operator2& m) {
    return std::norm(m.m00) + std::norm(m.m01) + std::norm(m.m10) + std::norm(m.m11);
}

// sqrt of the eigenvalues of M^dag M via the Hermitian quadratic formula; the
// alternative route for pinning the closed-form singular values.
std::array<double, 2> singular_values_by_eigen_route(const Operator2& m) {
    const double a = std::norm(m.m00) + std::norm(m.m10);
    const double d = std::norm(m.m01) + std::norm(m.m11);
    const complex b = std::conj(m.m00) * m.m01 + std::conj(m.m10) * m.m11;
    const double mean = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    return {std::sqrt(std::fmax(mean + radius, 0.0)), std::sqrt(std::fmax(mean - radius, 0.0))};
}

double max_entry_distance(const Operator2& a, const Operator2& b) {
    return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                     std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
}

Operator2 state_derivative(const ChannelModel& model, const BlochVector& v0, double t,
                           double h) {
    const DensityMatrix2 fwd = model.state(v0, t + h);
    const DensityMatrix2 bwd = model.state(v0, t - h);
    const double inv = 1.0 / (2.0 * h);
    return {(fwd.m00() - bwd.m00()) * inv, (fwd.m01() - bwd.m01()) * inv,
            (fwd.m10() - bwd.m10()) * inv, (fwd.m11() - bwd.m11()) * inv};
}

struct CheckBuilder {
    std::vector<CheckResult> results;

    void record(std::string name, double max_dev, double tol, bool skipped = false,
                std::string note = {}) {
        CheckResult r;
        r.name = std::move(name);
        r.max_deviation = max_dev;
        r.tolerance = tol;
        r.skipped = skipped;
        r.passed = skipped || max_dev <= tol;
        r.note = std::move(note);
        results.push_back(std::move(r));
    }
};

void check_quadrature_closed_forms(CheckBuilder& out, const QuadratureSpec& quad) {
    double dev = std::abs(integrate([](double) { return 1.0; }, 0.0, 1.0, quad) - 1.0);
    dev = std::max(dev, std::abs(integrate([](double t) { return std::exp(-t); }, 0.0, 1.0, quad) -
                                 (1.0 - std::exp(-1.0))));
    dev = std::max(dev, std::abs(integrate_semi_infinite(
                                     [](double w) { return std::exp(-w); }, 1.0, quad) -
                                 1.0));
    dev = std::max(dev, std::abs(integrate_semi_infinite(
                                     [](double w) { return w * std::exp(-w); }, 2.0, quad) -
                                 1.0));
    out.record("quadrature: closed-form integrals", dev, 1e-8);
}

void check_dephasing_integral(CheckBuilder& out, const VerifyOptions& opts) {
    double dev = 0.0;
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        for (double x : {0.1, 1.0, 5.0, 10.0}) {
            const OhmicParams params{1.0, s, 1.0, opts.kappa};
            const OhmicParams reference{1.0, s, 1.0, 1.0};
            const double integral =
                dephasing_exponent_by_quadrature(reference, x, opts.quadrature);
            dev = std::max(dev, relative_dev(dephasing_exponent(params, x), integral, 1e-12));
        }
    }
    const bool skipped = opts.kappa != 1.0;
    out.record("dephasing exponent vs spectral integral", dev, 1e-6, skipped,
               skipped ? "kappa != 1: anchored to the kappa = 1 integral, deviation expected"
                       : "");
}

void check_ohmic_s1_form(CheckBuilder& out, const VerifyOptions& opts) {
    double dev = 0.0;
    for (double t : {0.1, 1.0, 5.0, 10.0}) {
        const OhmicParams params{1.0, 1.0, 1.0, opts.kappa};
        const double expected = opts.kappa * 0.5 * std::log1p(t * t);
        dev = std::max(dev, std::abs(dephasing_exponent(params, t) - expected));
    }
    out.record("Ohmic s = 1 exponent closed form", dev, 1e-12);
}

void check_jc_population_quadrature(CheckBuilder& out, const QuadratureSpec& quad) {
    double dev = 0.0;
    const DampedJCParams weak{0.1, 1.0, 1.0};
    for (double t : {1.0, 5.0, 10.0}) {
        const double accumulated = integrate(
            [&weak](double u) { return jc_decay_rate(weak, u).value(); }, 0.0, t, quad);
        dev = std::max(dev, std::abs(accumulated + std::log(jc_population(weak, t))));
    }
    const DampedJCParams strong{10.0, 1.0, 1.0};
    const double accumulated = integrate(
        [&strong](double u) { return jc_decay_rate(strong, u).value(); }, 0.0, 0.6, quad);
    dev = std::max(dev, std::abs(accumulated + std::log(jc_population(strong, 0.6))));
    out.record("JC population vs decay-rate quadrature", dev, 1e-8);
}

void check_jc_derivative(CheckBuilder& out) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    const DampedJCParams sets[] = {{0.1, 1.0, 1.0}, {10.0, 1.0, 1.0}, {0.5, 1.0, 1.0}};
    double dev = 0.0;
    for (const auto& params : sets) {
        for (int i = 0; i < 100; ++i) {
            const double t = time(rng) + 1e-4;
            const double fd = central_derivative(
                [&params](double u) { return jc_population(params, u); }, t, 1e-5);
            dev = std::max(dev, std::abs(fd - jc_population_derivative(params, t)));
        }
    }
    out.record("JC dp/dt vs finite difference", dev, 1e-7);
}

void check_dephasing_derivative(CheckBuilder& out, const VerifyOptions& opts) {
    std::mt19937_64 rng(20240602);
    std::uniform_real_distribution<double> s_dist(0.3, 3.5);
    std::uniform_real_distribution<double> t_dist(0.01, 10.0);
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const OhmicParams params{scale(rng), s_dist(rng), scale(rng), opts.kappa};
        const double t = t_dist(rng);
        const double fd = central_derivative(
            [&params](double u) { return dephasing_exponent(params, u); }, t, 1e-5);
        dev = std::max(dev, std::abs(fd - dephasing_rate(params, t)));
    }
    out.record("dephasing rate vs exponent finite difference", dev, 1e-7);
}

void check_jc_generator_consistency(CheckBuilder& out) {
    std::mt19937_64 rng(20240603);
    std::uniform_real_distribution<double> time(1e-3, 6.0);
    const DampedJCParams sets[] = {{0.1, 1.0, 1.0}, {10.0, 1.0, 1.0}, {0.5, 1.0, 1.0}};
    double dev = 0.0;
    int accepted = 0;
    std::size_t set_index = 0;
    while (accepted < 100) {
        const DampedJCParams& params = sets[set_index];
        set_index = (set_index + 1) % 3;
        const BlochVector v0 = random_bloch(rng);
        const double t = time(rng);
        const auto rate = jc_decay_rate(params, t);
        // keep clear of rate poles and of the population-zero kink in sqrt(p)
        if (!rate || std::abs(*rate) > 10.0 || jc_population(params, t) < 5e-3) continue;
        const ChannelModel model = ChannelModel::damped_jc(params);
        const auto gen = model.generator(model.state(v0, t), t);
        dev = std::max(dev, max_entry_distance(state_derivative(model, v0, t, 1e-5), *gen));
        ++accepted;
    }
    out.record("JC generator vs d/dt of the state", dev, 1e-7);
}

void check_dephasing_generator_consistency(CheckBuilder& out, const VerifyOptions& opts) {
    std::mt19937_64 rng(20240604);
    std::uniform_real_distribution<double> s_dist(0.3, 3.5);
    std::uniform_real_distribution<double> time(1e-3, 10.0);
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const OhmicParams params{scale(rng), s_dist(rng), scale(rng), opts.kappa};
        const ChannelModel model = ChannelModel::ohmic_dephasing(params);
        const BlochVector v0 = random_bloch(rng);
        const double t = time(rng);
        const auto gen = model.generator(model.state(v0, t), t);
        dev = std::max(dev, max_entry_distance(state_derivative(model, v0, t, 1e-5), *gen));
    }
    out.record("dephasing generator vs d/dt of the state", dev, 1e-7);
}

void check_engine_vs_jc_closed(CheckBuilder& out, const QuadratureSpec& quad) {
    const BlochVector excited(0.0, 0.0, -1.0);
    double dev = 0.0;
    for (double gamma0 : {0.1, 10.0}) {
        const DampedJCParams params{gamma0, 1.0, 1.0};
        const ChannelModel model = ChannelModel::damped_jc(params);
        for (int i = 0; i <= 150; ++i) {
            const double tau = 8.0 * i / 150.0;
            const double engine = qsl_unified(model, excited, tau, 1.0, quad).tau_qsl;
            const double closed = qsl_jc_closed(params, tau, 1.0, quad);
            dev = std::max(dev, relative_dev(engine, closed, 1e-8));
        }
    }
    out.record("engine vs JC closed-form bound", dev, 1e-6);
}

void check_engine_vs_dephasing_closed(CheckBuilder& out, const VerifyOptions& opts) {
    double dev = 0.0;
    for (double s : {0.5, 1.0, 3.0}) {
        const OhmicParams params{1.0, s, 1.0, opts.kappa};
        const ChannelModel model = ChannelModel::ohmic_dephasing(params);
        for (double coh : {0.25, 1.0}) {
            const BlochVector v0(std::sqrt(coh), 0.0, 0.0);
            for (int i = 0; i <= 100; ++i) {
                const double tau = 8.0 * i / 100.0;
                const double engine = qsl_unified(model, v0, tau, 1.0, opts.quadrature).tau_qsl;
                const double closed = qsl_dephasing_closed(params, coh, tau, 1.0, opts.quadrature);
                dev = std::max(dev, relative_dev(engine, closed, 1e-8));
            }
        }
    }
    out.record("engine vs dephasing closed-form bound", dev, 1e-6);
}

void check_ideal_markov(CheckBuilder& out, const QuadratureSpec& quad) {
    const ChannelModel model =
        ChannelModel::damped_jc({0.1, 1.0, 1.0}, JcMode::ideal_markov);
    const BlochVector excited(0.0, 0.0, -1.0);
    double dev = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double tau = 0.1 * i;
        const double engine = qsl_unified(model, excited, tau, 1.0, quad).tau_qsl;
        dev = std::max(dev, std::abs(engine - qsl_markov_jc(0.1, tau, 1.0)));
    }
    out.record("engine vs ideal-Markov formula", dev, 1e-6);

    const double endpoint = qsl_unified(model, excited, 0.0, 1.0, quad).tau_qsl;
    out.record("pure-state Markovian endpoint tau_qsl = tau_d", std::abs(endpoint - 1.0), 1e-9);
}

void check_trace_inequalities(CheckBuilder& out) {
    std::mt19937_64 rng(20240605);
    double dev_vn = 0.0;
    double dev_cs = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Operator2 a = random_operator(rng);
        const Operator2 b = random_operator(rng);
        const auto sa = singular_values(a);
        const auto sb = singular_values(b);
        const double overlap = std::abs(trace_pair(a, b));
        dev_vn = std::max(dev_vn, overlap - (sa[0] * sb[0] + sa[1] * sb[1]));
        dev_cs = std::max(dev_cs, overlap * overlap - hs_norm_sq(a) * hs_norm_sq(b));
    }
    out.record("von Neumann trace inequality (10000 pairs)", std::fmax(dev_vn, 0.0), 1e-12);
    out.record("Cauchy-Schwarz inequality (10000 pairs)", std::fmax(dev_cs, 0.0), 1e-12);
}

void check_singular_value_routes(CheckBuilder& out) {
    std::mt19937_64 rng(20240606);
    double dev = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Operator2 m = random_operator(rng);
        const auto closed = singular_values(m);
        const auto eigen = singular_values_by_eigen_route(m);
        dev = std::max({dev, std::abs(closed[0] - eigen[0]), std::abs(closed[1] - eigen[1])});
    }
    out.record("singular values: closed form vs eigen route", dev, 1e-10);
}

void check_qubit_kernel_identities(CheckBuilder& out) {
    std::mt19937_64 rng(20240609);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BlochVector v = random_bloch(rng);
        const BlochVector w = to_bloch(from_bloch(v));
        dev = std::max({dev, std::abs(w.vx() - v.vx()), std::abs(w.vy() - v.vy()),
                        std::abs(w.vz() - v.vz())});
        dev = std::max(dev, std::abs(purity(from_bloch(v)) - 0.5 * (1.0 + v.norm_sq())));
        const Operator2 m = random_operator(rng);
        dev = std::max(dev, std::abs(hs_norm(m) * hs_norm(m) - hs_norm_sq(m)));
    }
    out.record("qubit kernel: round trip, purity, hs norm", dev, 1e-12);
}

void check_bound_validity(CheckBuilder& out, const QuadratureSpec& quad) {
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double excess = 0.0;       // tau_qsl - tau_d, clamped at 0
    double dominance = 0.0;    // d_ml - d_mt, clamped at 0
    for (int i = 0; i < 1000; ++i) {
        const bool use_jc = (i % 2) == 0;
        ChannelModel model = use_jc
            ? ChannelModel::damped_jc({0.05 + 12.0 * unit(rng), 0.5 + 1.5 * unit(rng), 1.0})
            : ChannelModel::ohmic_dephasing(
                  {0.2 + 1.8 * unit(rng), 0.3 + 3.2 * unit(rng), 0.5 + 1.5 * unit(rng), 1.0});
        const BlochVector v0 = random_bloch(rng);
        const double tau = 10.0 * unit(rng);
        const double tau_d = 0.1 + 2.9 * unit(rng);
        const SpeedLimitReport report = qsl_unified(model, v0, tau, tau_d, quad);
        excess = std::max(excess, report.tau_qsl - tau_d);
        dominance = std::max(dominance, report.d_ml - report.d_mt);
    }
    out.record("bound validity tau_qsl <= tau_d (1000 cases)", std::fmax(excess, 0.0), 1e-9);
    out.record("ML dominance d_ml <= d_mt (1000 cases)", std::fmax(dominance, 0.0), 0.0);
}

void check_unruh(CheckBuilder& out) {
    std::mt19937_64 rng(20240608);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BlochVector v = random_bloch(rng);
        const UnruhParams frame{std::pow(10.0, -2.0 + 5.0 * unit(rng)), 0.5 + 1.5 * unit(rng),
                                0.5 + 1.5 * unit(rng)};
        const double cr_sq = cos_r(frame) * cos_r(frame);
        const BlochVector mapped = transform_initial_state(v, frame);
        dev = std::max(dev, std::abs(coherence(mapped) - cr_sq * coherence(v)));
        const double population = 0.5 * (1.0 - mapped.vz());
        dev = std::max(dev, std::abs(population - (1.0 - 0.5 * (1.0 + v.vz()) * cr_sq)));
    }
    // inertial limit: the exponent underflows and the map is the identity
    const UnruhParams inertial{1e-12, 1.0, 1.0};
    const BlochVector probe(0.3, -0.5, 0.4);
    const BlochVector mapped = transform_initial_state(probe, inertial);
    dev = std::max({dev, std::abs(mapped.vx() - probe.vx()), std::abs(mapped.vy() - probe.vy()),
                    std::abs(mapped.vz() - probe.vz())});
    // direct evaluation of the defining formula at a = 2 pi, varpi = c = 1
    dev = std::max(dev, std::abs(cos_r({2.0 * std::numbers::pi, 1.0, 1.0}) -
                                 1.0 / std::sqrt(std::exp(-1.0) + 1.0)));
    out.record("Unruh transform identities", dev, 1e-12);

    double monotone = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double lo = 0.1 + 5.0 * unit(rng);
        const double hi = lo + 0.1 + 5.0 * unit(rng);
        const double varpi = 0.5 + 1.5 * unit(rng);
        const double c = 0.5 + 1.5 * unit(rng);
        monotone = std::max(monotone, cos_r({hi, varpi, c}) - cos_r({lo, varpi, c}));
        monotone = std::max(monotone, cos_r({lo, varpi, c}) - cos_r({lo, varpi + 0.3, c}));
        monotone = std::max(monotone, cos_r({lo, varpi, c}) - cos_r({lo, varpi, c + 0.3}));
    }
    out.record("cos_r monotonicity", std::fmax(monotone, 0.0), 0.0);
}

void check_unruh_dephasing_monotone(CheckBuilder& out, const VerifyOptions& opts) {
    const ChannelModel model = ChannelModel::ohmic_dephasing({1.0, 1.0, 1.0, opts.kappa});
    const BlochVector v0(1.0, 0.0, 0.0);
    double previous = 0.0;
    double rise = 0.0;
    for (int k = 0; k < 20; ++k) {
        const UnruhParams frame{0.5 + 0.5 * k, 1.0, 1.0};
        const double value =
            qsl_in_accelerated_frame(model, v0, frame, 1.0, 1.0, opts.quadrature).tau_qsl;
        if (k > 0) rise = std::max(rise, value - previous);
        previous = value;
    }
    out.record("dephasing tau_qsl nonincreasing in acceleration", std::fmax(rise, 0.0), 1e-12);
}

void check_coherence_trapping(CheckBuilder& out, const VerifyOptions& opts) {
    const OhmicParams params{1.0, 3.0, 1.0, opts.kappa};
    const bool skipped = opts.kappa != 1.0;
    double dev = 0.0;
    for (double t : {20.0, 25.0, 30.0, 40.0}) {
        dev = std::max(dev, relative_dev(dephasing_coherence_factor(params, t),
                                         std::exp(-1.0), 1e-12));
    }
    out.record("super-Ohmic coherence trapping at exp(-1)", dev, 0.01, skipped,
               skipped ? "kappa != 1 shifts the trapping plateau" : "");

    const ChannelModel model = ChannelModel::ohmic_dephasing(params);
    const BlochVector v0(1.0, 0.0, 0.0);
    double lo = 1e300;
    double hi = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double tau = 20.0 + i;
        const double value = qsl_unified(model, v0, tau, 1.0, opts.quadrature).tau_qsl;
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    out.record("trapped tau_qsl uniform beyond w_c t = 20", (hi - lo) / (0.5 * (hi + lo)), 0.01);
}

void check_oscillation(CheckBuilder& out, const QuadratureSpec& quad) {
    const DampedJCParams params{10.0, 1.0, 1.0};
    // population zeros from sign changes of the survival amplitude
    const auto amplitude = [&params](double t) { return jc_signals(params, JcMode::exact, t).amplitude; };
    std::vector<double> zeros;
    double prev_t = 0.0;
    double prev_a = amplitude(0.0);
    for (int i = 1; i <= 500 && zeros.size() < 4; ++i) {
        const double t = 0.01 * i;
        const double a = amplitude(t);
        if (prev_a != 0.0 && a != 0.0 && (prev_a > 0.0) != (a > 0.0)) {
            double lo = prev_t;
            double hi = t;
            for (int iter = 0; iter < 80; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if ((amplitude(mid) > 0.0) == (prev_a > 0.0)) lo = mid; else hi = mid;
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_a = a;
    }
    const double expected = 2.0 * std::numbers::pi / std::sqrt(19.0);
    double dev = 1.0;
    if (zeros.size() >= 3) {
        dev = 0.0;
        for (std::size_t k = 1; k < zeros.size(); ++k) {
            dev = std::max(dev, relative_dev(zeros[k] - zeros[k - 1], expected, 1e-12));
        }
    }
    out.record("non-Markovian p_t zero spacing = 2 pi / sqrt(19)", dev, 0.02);

    const ChannelModel model = ChannelModel::damped_jc(params);
    const BlochVector excited(0.0, 0.0, -1.0);
    std::vector<double> curve;
    for (int i = 0; i <= 500; ++i) {
        curve.push_back(qsl_unified(model, excited, 0.01 * i, 1.0, quad).tau_qsl);
    }
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
        if (curve[i] > curve[i - 1] && curve[i] > curve[i + 1]) ++maxima;
    }
    out.record("non-Markovian tau_qsl local maxima >= 3 on [0, 5]",
               maxima >= 3 ? 0.0 : static_cast<double>(3 - maxima), 0.0);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    opts.quadrature.validate();
    if (!(opts.kappa > 0.0) || !std::isfinite(opts.kappa)) {
        throw std::invalid_argument("run_verify: kappa must be > 0");
    }
    CheckBuilder out;
    check_quadrature_closed_forms(out, opts.quadrature);
    check_dephasing_integral(out, opts);
    check_ohmic_s1_form(out, opts);
    check_jc_population_quadrature(out, opts.quadrature);
    check_jc_derivative(out);
    check_dephasing_derivative(out, opts);
    check_jc_generator_consistency(out);
    check_dephasing_generator_consistency(out, opts);
    check_engine_vs_jc_closed(out, opts.quadrature);
    check_engine_vs_dephasing_closed(out, opts);
    check_ideal_markov(out, opts.quadrature);
    check_trace_inequalities(out);
    check_singular_value_routes(out);
    check_qubit_kernel_identities(out);
    check_bound_validity(out, opts.quadrature);
    check_unruh(out);
    check_unruh_dephasing_monotone(out, opts);
    check_coherence_trapping(out, opts);
    check_oscillation(out, opts.quadrature);
    return out.results;
}

bool print_verify_report(std::ostream& os, const std::vector<CheckResult>& results) {
    bool ok = true;
    for (const CheckResult& r : results) {
        const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
        os << '[' << tag << "] " << r.name << " (max dev " << r.max_deviation << ", tol "
           << r.tolerance << ')';
        if (!r.note.empty()) os << " -- " << r.note;
        os << '\n';
        if (!r.passed && !r.skipped) ok = false;
    }
    return ok;
}

}  // namespace qsl
