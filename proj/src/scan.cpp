#include "qsl/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace qsl {

std::string format_value(double x) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

void LinearGrid::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw std::invalid_argument("LinearGrid: non-finite bound");
    }
    if (!(step > 0.0)) throw std::invalid_argument("LinearGrid: step must be > 0");
    if (!(start <= stop)) throw std::invalid_argument("LinearGrid: start must be <= stop");
}

std::size_t LinearGrid::size() const {
    validate();
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

void ScanConfig::validate() const {
    if (curves.empty()) throw std::invalid_argument("ScanConfig: no curves configured");
    tau_grid.validate();
    quadrature.validate();
    if (!(tau_d > 0.0) || !std::isfinite(tau_d)) {
        throw std::invalid_argument("ScanConfig: tau_d must be > 0");
    }
    if (threads < 1) throw std::invalid_argument("ScanConfig: threads must be >= 1");
    if (output_path.empty()) throw std::invalid_argument("ScanConfig: output path is empty");
}

void UnruhSweepConfig::validate() const {
    tau_grid.validate();
    a_grid.validate();
    quadrature.validate();
    if (!(a_grid.start > 0.0)) {
        throw std::invalid_argument("UnruhSweepConfig: accelerations must be > 0");
    }
    if (!(varpi > 0.0) || !(c > 0.0)) {
        throw std::invalid_argument("UnruhSweepConfig: varpi and c must be > 0");
    }
    if (!(tau_d > 0.0) || !std::isfinite(tau_d)) {
        throw std::invalid_argument("UnruhSweepConfig: tau_d must be > 0");
    }
    if (threads < 1) throw std::invalid_argument("UnruhSweepConfig: threads must be >= 1");
    if (output_path.empty()) throw std::invalid_argument("UnruhSweepConfig: output path is empty");
}

std::vector<ScanRow> evaluate_curve(const CurveSpec& curve, const LinearGrid& grid,
                                    double tau_d, const QuadratureSpec& spec, int threads) {
    const std::size_t n = grid.size();
    std::vector<ScanRow> rows(n);
    std::vector<std::exception_ptr> failures(n);

    const auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double tau = grid.at(i);
            try {
                rows[i].tau = tau;
                rows[i].signal = curve.model.signal(tau);
                rows[i].report = qsl_unified(curve.model, curve.v0, tau, tau_d, spec);
            } catch (const QuadratureError& e) {
                failures[i] = std::make_exception_ptr(
                    QuadratureError("tau = " + format_value(tau) + ": " + e.what()));
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        eval_range(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(eval_range, lo, hi);
        }
        for (auto& worker : pool) worker.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);  // smallest tau wins
    }
    return rows;
}

namespace {

constexpr const char* kColumnNames[] = {"tau",       "tau_qsl", "tau_qsl_over_tau_d",
                                        "signal",    "numerator", "d_ml",
                                        "d_mt",      "dominant",  "degenerate"};

void write_header(std::ostream& os, OutputFormat format, const char* extra_a = nullptr,
                  const char* extra_cr = nullptr) {
    const char sep = format == OutputFormat::csv ? ',' : ' ';
    if (format == OutputFormat::plotdata) os << "# ";
    bool first = true;
    for (const char* name : kColumnNames) {
        if (!first) os << sep;
        os << name;
        first = false;
    }
    if (extra_a != nullptr) os << sep << extra_a << sep << extra_cr;
    os << '\n';
}

void write_row(std::ostream& os, char sep, double tau_d, const ScanRow& row) {
    os << format_value(row.tau) << sep << format_value(row.report.tau_qsl) << sep
       << format_value(row.report.tau_qsl / tau_d) << sep << format_value(row.signal) << sep
       << format_value(row.report.numerator) << sep << format_value(row.report.d_ml) << sep
       << format_value(row.report.d_mt) << sep
       << (row.report.dominant == Bound::ML ? "ML" : "MT") << sep
       << (row.report.degenerate ? 1 : 0);
}

void write_argmin_footer(std::ostream& os, const std::vector<ScanRow>& rows) {
    const auto it = std::min_element(
        rows.begin(), rows.end(),
        [](const ScanRow& a, const ScanRow& b) { return a.report.tau_qsl < b.report.tau_qsl; });
    os << "# argmin: tau = " << format_value(it->tau)
       << ", tau_qsl = " << format_value(it->report.tau_qsl) << '\n';
}

}  // namespace

void write_scan(std::ostream& os, const ScanConfig& cfg,
                const std::vector<std::vector<ScanRow>>& blocks) {
    const char sep = cfg.format == OutputFormat::csv ? ',' : ' ';
    write_header(os, cfg.format);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0 && cfg.format == OutputFormat::plotdata) os << "\n\n";  // gnuplot index break
        const CurveSpec& curve = cfg.curves[b];
        if (!curve.label.empty()) os << "# curve: " << curve.label << '\n';
        for (const ScanRow& row : blocks[b]) {
            write_row(os, sep, cfg.tau_d, row);
            os << '\n';
        }
        write_argmin_footer(os, blocks[b]);
        if (curve.model.is_ideal_markov()) {
            const double tau_c = std::log(2.0) / curve.model.jc_params()->gamma0;
            os << "# analytic tau_c = " << format_value(tau_c) << '\n';
        }
    }
}

void run_scan(const ScanConfig& cfg) {
    cfg.validate();
    std::vector<std::vector<ScanRow>> blocks;
    blocks.reserve(cfg.curves.size());
    for (const CurveSpec& curve : cfg.curves) {
        blocks.push_back(
            evaluate_curve(curve, cfg.tau_grid, cfg.tau_d, cfg.quadrature, cfg.threads));
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("run_scan: cannot open " + cfg.output_path);
    write_scan(out, cfg, blocks);
    out.flush();
    if (!out) throw std::runtime_error("run_scan: write failed for " + cfg.output_path);
}

namespace {

ScanConfig figure1_config(double gamma0, std::string output) {
    ScanConfig cfg;
    cfg.curves.push_back({ChannelModel::damped_jc({gamma0, 1.0, 1.0}), BlochVector(0, 0, -1), ""});
    cfg.tau_grid = {0.0, 20.0, 0.02};
    cfg.tau_d = 1.0;
    cfg.output_path = std::move(output);
    return cfg;
}

}  // namespace

ScanConfig preset_fig1a() { return figure1_config(0.1, "fig1a.csv"); }

ScanConfig preset_fig1b() { return figure1_config(10.0, "fig1b.csv"); }

ScanConfig preset_fig2() {
    ScanConfig cfg;
    for (double s : {0.5, 1.0, 3.0}) {
        for (double coh : {0.25, 0.5, 1.0}) {
            char label[64];
            std::snprintf(label, sizeof label, "s = %g, C = %g", s, coh);
            cfg.curves.push_back({ChannelModel::ohmic_dephasing({1.0, s, 1.0, 1.0}),
                                  BlochVector(std::sqrt(coh), 0.0, 0.0), label});
        }
    }
    cfg.tau_grid = {0.0, 20.0, 0.02};
    cfg.tau_d = 1.0;
    cfg.output_path = "fig2.csv";
    return cfg;
}

std::vector<UnruhRow> evaluate_unruh_sweep(const UnruhSweepConfig& cfg) {
    cfg.validate();
    std::vector<UnruhRow> rows;
    const std::size_t n_accel = cfg.a_grid.size();
    rows.reserve(n_accel * cfg.tau_grid.size());
    for (std::size_t k = 0; k < n_accel; ++k) {
        const UnruhParams frame{cfg.a_grid.at(k), cfg.varpi, cfg.c};
        const CurveSpec transformed{cfg.curve.model,
                                    transform_initial_state(cfg.curve.v0, frame),
                                    cfg.curve.label};
        const auto block =
            evaluate_curve(transformed, cfg.tau_grid, cfg.tau_d, cfg.quadrature, cfg.threads);
        const double cr = cos_r(frame);
        for (const ScanRow& row : block) {
            rows.push_back({frame.acceleration, cr, row});
        }
    }
    return rows;
}

void write_unruh_sweep(std::ostream& os, const UnruhSweepConfig& cfg,
                       const std::vector<UnruhRow>& rows) {
    const char sep = cfg.format == OutputFormat::csv ? ',' : ' ';
    write_header(os, cfg.format, "a", "cos_r");
    for (const UnruhRow& row : rows) {
        write_row(os, sep, cfg.tau_d, row.row);
        os << sep << format_value(row.acceleration) << sep << format_value(row.cos_r) << '\n';
    }
    const auto it = std::min_element(rows.begin(), rows.end(),
                                     [](const UnruhRow& a, const UnruhRow& b) {
                                         return a.row.report.tau_qsl < b.row.report.tau_qsl;
                                     });
    if (it != rows.end()) {
        os << "# argmin: a = " << format_value(it->acceleration)
           << ", tau = " << format_value(it->row.tau)
           << ", tau_qsl = " << format_value(it->row.report.tau_qsl) << '\n';
    }
}

void run_unruh_sweep(const UnruhSweepConfig& cfg) {
    const auto rows = evaluate_unruh_sweep(cfg);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("run_unruh_sweep: cannot open " + cfg.output_path);
    write_unruh_sweep(out, cfg, rows);
    out.flush();
    if (!out) throw std::runtime_error("run_unruh_sweep: write failed for " + cfg.output_path);
}

}  // namespace qsl
