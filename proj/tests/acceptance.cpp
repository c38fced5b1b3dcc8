// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/scan.hpp"
#include "qsl/speed_limit.hpp"
#include "qsl/unruh.hpp"

using namespace qsl;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

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

std::string fmt(double x) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.3g", x);
    return buffer;
}

// 1. ideal-Markov engine vs tau_d |1 - 2 e^{-gamma0 tau}|, argmin at tau_c
Outcome criterion_ideal_markov() {
    const auto start = std::chrono::steady_clock::now();
    const ChannelModel model = ChannelModel::damped_jc({0.1, 1.0, 1.0}, JcMode::ideal_markov);
    const BlochVector excited(0.0, 0.0, -1.0);
    const double tau_d = 1.0;
    double max_err = 0.0;
    double argmin_tau = 0.0;
    double min_value = 1e300;
    for (int i = 0; i <= 3000; ++i) {
        const double tau = 0.01 * i;
        const double engine = qsl_unified(model, excited, tau, tau_d, {}).tau_qsl;
        max_err = std::max(max_err, std::abs(engine - qsl_markov_jc(0.1, tau, tau_d)));
        if (engine < min_value) {
            min_value = engine;
            argmin_tau = tau;
        }
    }
    const double tau_c = 10.0 * std::log(2.0);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = max_err <= 1e-6 && std::abs(argmin_tau - tau_c) <= 0.01 + 1e-12 &&
                    elapsed < 5.0;
    return {ok, "max err " + fmt(max_err) + " (tol 1e-6), argmin " + fmt(argmin_tau) +
                    " vs tau_c " + fmt(tau_c) + ", " + fmt(elapsed) + " s"};
}

// 2. pure-state Markovian endpoint
Outcome criterion_pure_endpoint() {
    const ChannelModel model = ChannelModel::damped_jc({0.1, 1.0, 1.0}, JcMode::ideal_markov);
    const double value = qsl_unified(model, {0.0, 0.0, -1.0}, 0.0, 1.0, {}).tau_qsl;
    return {std::abs(value - 1.0) <= 1e-9,
            "|tau_qsl - tau_d| = " + fmt(std::abs(value - 1.0)) + " (tol 1e-9)"};
}

// 3. engine vs the two closed forms on 500-point grids
Outcome criterion_closed_forms() {
    double dev = 0.0;
    const BlochVector excited(0.0, 0.0, -1.0);
    const struct {
        double gamma0;
        double stop;
    } jc_cases[] = {{0.1, 20.0}, {10.0, 5.0}};
    for (const auto& c : jc_cases) {
        const DampedJCParams params{c.gamma0, 1.0, 1.0};
        const ChannelModel model = ChannelModel::damped_jc(params);
        for (int i = 0; i < 500; ++i) {
            const double tau = c.stop * i / 499.0;
            const double engine = qsl_unified(model, excited, tau, 1.0, {}).tau_qsl;
            const double closed = qsl_jc_closed(params, tau, 1.0, {});
            dev = std::max(dev, relative_dev(engine, closed, 1e-8));
        }
    }
    for (double s : {0.5, 1.0, 3.0}) {
        const OhmicParams params{1.0, s, 1.0, 1.0};
        const ChannelModel model = ChannelModel::ohmic_dephasing(params);
        for (double coh : {0.25, 1.0}) {
            const BlochVector v0(std::sqrt(coh), 0.0, 0.0);
            for (int i = 0; i < 500; ++i) {
                const double tau = 10.0 * i / 499.0;
                const double engine = qsl_unified(model, v0, tau, 1.0, {}).tau_qsl;
                const double closed = qsl_dephasing_closed(params, coh, tau, 1.0, {});
                dev = std::max(dev, relative_dev(engine, closed, 1e-8));
            }
        }
    }
    return {dev <= 1e-6, "max relative dev " + fmt(dev) + " (tol 1e-6)"};
}

// 4. non-Markovian oscillation: maxima count and p-zero spacing
Outcome criterion_oscillation() {
    const DampedJCParams params{10.0, 1.0, 1.0};
    const ChannelModel model = ChannelModel::damped_jc(params);
    std::vector<double> curve;
    for (int i = 0; i <= 500; ++i) {
        curve.push_back(qsl_unified(model, {0, 0, -1}, 0.01 * i, 1.0, {}).tau_qsl);
    }
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
        if (curve[i] > curve[i - 1] && curve[i] > curve[i + 1]) ++maxima;
    }

    const auto amplitude = [&params](double t) {
        return jc_signals(params, JcMode::exact, t).amplitude;
    };
    std::vector<double> zeros;
    double prev_t = 0.0;
    double prev_a = amplitude(0.0);
    for (int i = 1; i <= 500 && zeros.size() < 4; ++i) {
        const double t = 0.01 * i;
        const double a = amplitude(t);
        if ((prev_a > 0.0) != (a > 0.0)) {
            double lo = prev_t;
            double hi = t;
            for (int iter = 0; iter < 80; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if ((amplitude(mid) > 0.0) == (prev_a > 0.0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_a = a;
    }
    const double expected = 2.0 * std::numbers::pi / std::sqrt(19.0);
    double spacing_dev = 1.0;
    if (zeros.size() >= 3) {
        spacing_dev = 0.0;
        for (std::size_t k = 1; k < zeros.size(); ++k) {
            spacing_dev = std::max(spacing_dev,
                                   relative_dev(zeros[k] - zeros[k - 1], expected, 1e-12));
        }
    }
    const bool ok = maxima >= 3 && spacing_dev <= 0.02;
    return {ok, std::to_string(maxima) + " maxima (need >= 3), zero-spacing dev " +
                    fmt(spacing_dev) + " (tol 0.02)"};
}

// 5. dephasing exponent vs the spectral integral, and the exact s = 1 form
Outcome criterion_dephasing_oracle() {
    double rel = 0.0;
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        const OhmicParams params{1.0, s, 1.0, 1.0};
        for (double x : {0.1, 1.0, 5.0, 10.0}) {
            const double integral = dephasing_exponent_by_quadrature(params, x, {});
            rel = std::max(rel, relative_dev(dephasing_exponent(params, x), integral, 1e-12));
        }
    }
    double s1 = 0.0;
    for (double x : {0.1, 1.0, 5.0, 10.0}) {
        s1 = std::max(s1, std::abs(dephasing_exponent({1.0, 1.0, 1.0, 1.0}, x) -
                                   0.5 * std::log1p(x * x)));
    }
    const bool ok = rel <= 1e-6 && s1 <= 1e-9;
    return {ok, "integral dev " + fmt(rel) + " (tol 1e-6), s=1 dev " + fmt(s1) + " (tol 1e-9)"};
}

// 6. coherence trapping and uniform late-time speed
Outcome criterion_trapping() {
    const OhmicParams params{1.0, 3.0, 1.0, 1.0};
    double q_dev = 0.0;
    for (double t = 20.0; t <= 40.0; t += 1.0) {
        q_dev = std::max(q_dev, relative_dev(dephasing_coherence_factor(params, t),
                                             std::exp(-1.0), 1e-12));
    }
    const ChannelModel model = ChannelModel::ohmic_dephasing(params);
    double lo = 1e300;
    double hi = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double tau = 20.0 + 0.5 * i;
        const double value = qsl_unified(model, {1, 0, 0}, tau, 1.0, {}).tau_qsl;
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    const double spread = (hi - lo) / (0.5 * (hi + lo));
    const bool ok = q_dev <= 0.01 && spread <= 0.01;
    return {ok, "q dev " + fmt(q_dev) + " (tol 0.01), tau_qsl spread " + fmt(spread) +
                    " (tol 0.01)"};
}

// 7. bound validity and ML dominance on 1000 randomized cases
Outcome criterion_bound_validity() {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double excess = 0.0;
    double dominance = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const bool use_jc = (i % 2) == 0;
        const ChannelModel model =
            use_jc ? ChannelModel::damped_jc(
                         {0.05 + 12.0 * unit(rng), 0.5 + 1.5 * unit(rng), 1.0})
                   : ChannelModel::ohmic_dephasing({0.2 + 1.8 * unit(rng), 0.3 + 3.2 * unit(rng),
                                                    0.5 + 1.5 * unit(rng), 1.0});
        const BlochVector v0 = random_bloch(rng);
        const double tau = 10.0 * unit(rng);
        const double tau_d = 0.1 + 2.9 * unit(rng);
        const SpeedLimitReport r = qsl_unified(model, v0, tau, tau_d, {});
        excess = std::max(excess, r.tau_qsl - tau_d);
        dominance = std::max(dominance, r.d_ml - r.d_mt);
    }
    const bool ok = excess <= 1e-9 && dominance <= 0.0;
    return {ok, "max (tau_qsl - tau_d) " + fmt(excess) + " (tol 1e-9), max (d_ml - d_mt) " +
                    fmt(dominance) + " (tol 0)"};
}

// 8. generator consistency, 100 random cases per model
Outcome criterion_generator_consistency() {
    const auto entry_gap = [](const Operator2& a, const Operator2& b) {
        return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                         std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
    };
    const auto fd_state = [](const ChannelModel& model, const BlochVector& v0, double t) {
        const double h = 1e-5;
        const DensityMatrix2 fwd = model.state(v0, t + h);
        const DensityMatrix2 bwd = model.state(v0, t - h);
        return Operator2{(fwd.m00() - bwd.m00()) / (2 * h), (fwd.m01() - bwd.m01()) / (2 * h),
                         (fwd.m10() - bwd.m10()) / (2 * h), (fwd.m11() - bwd.m11()) / (2 * h)};
    };

    std::mt19937_64 rng(515151);
    std::uniform_real_distribution<double> time(1e-3, 6.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dev = 0.0;

    const DampedJCParams jc_sets[] = {{0.1, 1.0, 1.0}, {10.0, 1.0, 1.0}, {0.5, 1.0, 1.0}};
    int accepted = 0;
    std::size_t which = 0;
    while (accepted < 100) {
        const DampedJCParams& params = jc_sets[which];
        which = (which + 1) % 3;
        const BlochVector v0 = random_bloch(rng);
        const double t = time(rng);
        const auto rate = jc_decay_rate(params, t);
        if (!rate || std::abs(*rate) > 10.0 || jc_population(params, t) < 5e-3) continue;
        const ChannelModel model = ChannelModel::damped_jc(params);
        const auto gen = model.generator(model.state(v0, t), t);
        dev = std::max(dev, entry_gap(fd_state(model, v0, t), *gen));
        ++accepted;
    }
    for (int i = 0; i < 100; ++i) {
        const OhmicParams params{0.5 + 1.5 * unit(rng), 0.3 + 3.2 * unit(rng),
                                 0.5 + 1.5 * unit(rng), 1.0};
        const ChannelModel model = ChannelModel::ohmic_dephasing(params);
        const BlochVector v0 = random_bloch(rng);
        const double t = 1e-3 + 10.0 * unit(rng);
        const auto gen = model.generator(model.state(v0, t), t);
        dev = std::max(dev, entry_gap(fd_state(model, v0, t), *gen));
    }
    return {dev <= 1e-7, "max entrywise dev " + fmt(dev) + " (tol 1e-7)"};
}

// 9. inequality suites on 10000 random operator pairs
Outcome criterion_inequalities() {
    std::mt19937_64 rng(616161);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto entry = [&] { return complex(unit(rng), unit(rng)); };
    double vn = 0.0;
    double cs = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Operator2 a{entry(), entry(), entry(), entry()};
        const Operator2 b{entry(), entry(), entry(), entry()};
        const complex tr = a.m00 * b.m00 + a.m01 * b.m10 + a.m10 * b.m01 + a.m11 * b.m11;
        const auto sa = singular_values(a);
        const auto sb = singular_values(b);
        vn = std::max(vn, std::abs(tr) - (sa[0] * sb[0] + sa[1] * sb[1]));
        const double ta = std::norm(a.m00) + std::norm(a.m01) + std::norm(a.m10) +
                          std::norm(a.m11);
        const double tb = std::norm(b.m00) + std::norm(b.m01) + std::norm(b.m10) +
                          std::norm(b.m11);
        cs = std::max(cs, std::norm(tr) - ta * tb);
    }
    const bool ok = vn <= 1e-12 && cs <= 1e-12;
    return {ok, "max von Neumann violation " + fmt(std::fmax(vn, 0.0)) +
                    ", max Cauchy-Schwarz violation " + fmt(std::fmax(cs, 0.0)) +
                    " (tol 1e-12)"};
}

// 10. Unruh identities and dephasing monotonicity in a
Outcome criterion_unruh() {
    double dev = 0.0;
    const BlochVector probe(0.3, -0.5, 0.4);
    const BlochVector same = transform_initial_state(probe, {1e-9, 1.0, 1.0});
    dev = std::max({dev, std::abs(same.vx() - probe.vx()), std::abs(same.vy() - probe.vy()),
                    std::abs(same.vz() - probe.vz())});

    std::mt19937_64 rng(717171);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const BlochVector v = random_bloch(rng);
        const UnruhParams frame{std::pow(10.0, -2.0 + 5.0 * unit(rng)), 0.5 + 1.5 * unit(rng),
                                0.5 + 1.5 * unit(rng)};
        const double cr_sq = cos_r(frame) * cos_r(frame);
        const BlochVector mapped = transform_initial_state(v, frame);
        dev = std::max(dev, std::abs(coherence(mapped) - cr_sq * coherence(v)));
        dev = std::max(dev, std::abs(0.5 * (1.0 - mapped.vz()) -
                                     (1.0 - 0.5 * (1.0 + v.vz()) * cr_sq)));
    }

    const ChannelModel model = ChannelModel::ohmic_dephasing({1.0, 1.0, 1.0, 1.0});
    double rise = 0.0;
    double previous = 1e300;
    for (int k = 0; k < 20; ++k) {
        const double value = qsl_in_accelerated_frame(model, {1, 0, 0}, {0.5 + 0.5 * k, 1.0, 1.0},
                                                      1.0, 1.0, {})
                                 .tau_qsl;
        if (k > 0) rise = std::max(rise, value - previous);
        previous = value;
    }
    const bool ok = dev <= 1e-12 && rise <= 0.0;
    return {ok, "identity dev " + fmt(dev) + " (tol 1e-12), max rise in a " +
                    fmt(std::fmax(rise, 0.0)) + " (tol 0)"};
}

// 11. preset reproducibility: repeated runs and serial vs parallel
Outcome criterion_reproducibility() {
    const auto render = [](ScanConfig cfg, int threads) {
        cfg.threads = threads;
        std::vector<std::vector<ScanRow>> blocks;
        for (const CurveSpec& curve : cfg.curves) {
            blocks.push_back(
                evaluate_curve(curve, cfg.tau_grid, cfg.tau_d, cfg.quadrature, cfg.threads));
        }
        std::ostringstream out;
        write_scan(out, cfg, blocks);
        return out.str();
    };
    bool ok = true;
    std::string note;
    for (const auto& make : {preset_fig1a, preset_fig1b, preset_fig2}) {
        const ScanConfig cfg = make();
        const std::string serial = render(cfg, 1);
        if (serial != render(cfg, 1)) {
            ok = false;
            note += cfg.output_path + " differs across runs; ";
        }
        if (serial != render(cfg, 4)) {
            ok = false;
            note += cfg.output_path + " differs serial vs parallel; ";
        }
    }
    return {ok, ok ? "fig1a, fig1b, fig2 byte-identical (2 runs + 4 threads)" : note};
}

}  // namespace

int main() {
    const struct {
        int id;
        const char* title;
        std::function<Outcome()> body;
    } criteria[] = {
        {1, "ideal-Markov JC formula and critical time", criterion_ideal_markov},
        {2, "pure-state Markovian endpoint", criterion_pure_endpoint},
        {3, "engine/closed-form equivalence", criterion_closed_forms},
        {4, "non-Markovian oscillation", criterion_oscillation},
        {5, "dephasing exponent oracle", criterion_dephasing_oracle},
        {6, "coherence trapping", criterion_trapping},
        {7, "bound validity and ML dominance", criterion_bound_validity},
        {8, "generator consistency", criterion_generator_consistency},
        {9, "trace inequality suites", criterion_inequalities},
        {10, "Unruh checks", criterion_unruh},
        {11, "preset reproducibility", criterion_reproducibility},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome{false, "exception"};
        try {
            outcome = criterion.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d (%s): %s\n", outcome.passed ? "PASS" : "FAIL",
                    criterion.id, criterion.title, outcome.detail.c_str());
        if (!outcome.passed) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", std::size(criteria));
    return 0;
}
