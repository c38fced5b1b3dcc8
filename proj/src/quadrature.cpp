#include "qsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

namespace qsl {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol) || !(rel_tol > 0.0) ||
        !std::isfinite(rel_tol)) {
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    }
    if (max_depth < 1) {
        throw std::invalid_argument("QuadratureSpec: max_depth must be >= 1");
    }
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]; the Gauss
// nodes sit at the odd indices (and the center).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWeightsKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWeightsGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::string format_number(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::string format_interval(double a, double b) {
    return "[" + format_number(a) + ", " + format_number(b) + "]";
}

struct Panel {
    double a;
    double b;
    double integral;
    double error;
    int depth;
};

// Worst panel first; ties broken by position so refinement order (and hence
// the result) is reproducible bit for bit.
struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        if (lhs.a != rhs.a) return lhs.a > rhs.a;
        return lhs.b > rhs.b;
    }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double gauss = kWeightsGauss[3] * fc;
    double kronrod = kWeightsKronrod[7] * fc;
    double res_abs = kWeightsKronrod[7] * std::abs(fc);

    double fv[7][2];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        fv[j][0] = f(center - dx);
        fv[j][1] = f(center + dx);
        const double pair_sum = fv[j][0] + fv[j][1];
        kronrod += kWeightsKronrod[j] * pair_sum;
        res_abs += kWeightsKronrod[j] * (std::abs(fv[j][0]) + std::abs(fv[j][1]));
        if (j % 2 == 1) gauss += kWeightsGauss[j / 2] * pair_sum;
    }

    const double mean = 0.5 * kronrod;
    double res_asc = kWeightsKronrod[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        res_asc += kWeightsKronrod[j] * (std::abs(fv[j][0] - mean) + std::abs(fv[j][1] - mean));
    }
    res_abs *= half;
    res_asc *= half;

    double err = std::abs((kronrod - gauss) * half);
    if (std::isnan(err)) {
        err = std::numeric_limits<double>::infinity();  // force refinement past bad nodes
    } else {
        if (res_asc != 0.0 && err != 0.0) {
            err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
        }
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
            err = std::max(err, 50.0 * eps * res_abs);  // round-off floor
        }
    }
    return {a, b, kronrod * half, err, depth};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    spec.validate();
    if (!f) throw std::invalid_argument("integrate: missing integrand");
    if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b)) {
        throw std::invalid_argument("integrate: requires finite a <= b");
    }
    if (a == b) return 0.0;

    // Globally adaptive: keep a worst-first queue of panels and bisect until
    // the summed error estimate meets the budget. Endpoint singularities then
    // soak up subdivisions without starving the rest of the interval. Panels
    // whose estimate is unusable (infinite error from non-finite integrand
    // values) are counted separately so they cannot poison the running sums.
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    double total_integral = 0.0;
    double total_error = 0.0;
    std::size_t unresolved = 0;

    const auto add_panel = [&](const Panel& panel) {
        if (std::isinf(panel.error)) {
            ++unresolved;
        } else {
            total_integral += panel.integral;
            total_error += panel.error;
        }
        queue.push(panel);
    };
    const auto remove_panel = [&](const Panel& panel) {
        if (std::isinf(panel.error)) {
            --unresolved;
        } else {
            total_integral -= panel.integral;
            total_error = std::max(total_error - panel.error, 0.0);
        }
        queue.pop();
    };
    const auto budget = [&spec](double integral_magnitude) {
        return std::max(spec.abs_tol, spec.rel_tol * integral_magnitude);
    };

    add_panel(gauss_kronrod_15(f, a, b, 0));
    constexpr std::size_t kMaxPanels = 100000;
    std::size_t panels = 1;

    while (unresolved > 0 || total_error > budget(std::abs(total_integral))) {
        if (panels >= kMaxPanels) {
            throw QuadratureError("integrate: no convergence on " + format_interval(a, b));
        }
        const Panel worst = queue.top();
        if (worst.depth >= spec.max_depth) {
            throw QuadratureError("integrate: max_depth exhausted near " +
                                  format_interval(worst.a, worst.b));
        }
        remove_panel(worst);
        const double mid = 0.5 * (worst.a + worst.b);
        add_panel(gauss_kronrod_15(f, worst.a, mid, worst.depth + 1));
        add_panel(gauss_kronrod_15(f, mid, worst.b, worst.depth + 1));
        ++panels;
    }

    std::vector<Panel> done;

    // Re-sum the final partition left to right for a well-defined value.
    done.reserve(panels);
    while (!queue.empty()) {
        done.push_back(queue.top());
        queue.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
    double result = 0.0;
    for (const Panel& panel : done) result += panel.integral;
    return result;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double decay_scale,
                               const QuadratureSpec& spec) {
    spec.validate();
    if (!f) throw std::invalid_argument("integrate_semi_infinite: missing integrand");
    if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
        throw std::invalid_argument("integrate_semi_infinite: decay_scale must be > 0");
    }
    const auto scaled = [&f, decay_scale](double x) { return decay_scale * f(decay_scale * x); };

    // Probe the envelope constant M >= sup |scaled(x)| e^x; the 4x slack
    // covers oscillation peaks between probe nodes.
    double envelope = 0.0;
    for (int k = 1; k <= 1000; ++k) {
        const double x = 0.05 * k;
        const double magnitude = std::abs(scaled(x));
        if (!std::isfinite(magnitude)) {
            throw QuadratureError("integrate_semi_infinite: integrand not finite at w = " +
                                  format_number(decay_scale * x));
        }
        envelope = std::max(envelope, magnitude * std::exp(x));
    }
    envelope *= 4.0;

    // Truncation: tail <= M e^{-x_max} <= abs_tol / 2.
    double x_max = 50.0;
    if (envelope > 0.0) {
        x_max = std::clamp(std::log(envelope / (0.5 * spec.abs_tol)), 50.0, 700.0);
    }
    QuadratureSpec inner = spec;
    inner.abs_tol = 0.5 * spec.abs_tol;
    return integrate(scaled, 0.0, x_max, inner);
}

double central_derivative(const std::function<double(double)>& f, double t, double h) {
    if (!f) throw std::invalid_argument("central_derivative: missing function");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("central_derivative: h must be positive");
    }
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace qsl
