// scan.hpp — parameter sweeps over the window start tau, figure presets, and
// CSV / plot-data emission.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsl/unruh.hpp"

namespace qsl {

enum class OutputFormat { csv, plotdata };

struct LinearGrid {
    double start = 0.0;
    double stop = 20.0;
    double step = 0.02;

    void validate() const;  // step > 0, start <= stop, finite bounds
    std::size_t size() const;
    double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

// One curve of a scan: a channel plus the initial state it runs from. The
// label, when nonempty, is emitted as a '#' comment ahead of the block.
struct CurveSpec {
    ChannelModel model;
    BlochVector v0;
    std::string label;
};

struct ScanConfig {
    std::vector<CurveSpec> curves;
    LinearGrid tau_grid;
    double tau_d = 1.0;
    QuadratureSpec quadrature;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    int threads = 1;

    void validate() const;
};

struct ScanRow {
    double tau = 0.0;
    double signal = 0.0;  // p_tau (JC) or q_tau (dephasing)
    SpeedLimitReport report;
};

// Evaluates one curve over the grid. Rows are computed independently (chunked
// across threads when threads > 1) and stored in grid order, so the result is
// identical for serial and parallel execution. Quadrature failures carry the
// offending tau in the exception message; the failure at the smallest tau
// wins.
std::vector<ScanRow> evaluate_curve(const CurveSpec& curve, const LinearGrid& grid,
                                    double tau_d, const QuadratureSpec& spec, int threads);

// Emits all blocks in the configured format. Columns, in order:
//   tau, tau_qsl, tau_qsl_over_tau_d, signal, numerator, d_ml, d_mt,
//   dominant, degenerate
// with 12-significant-digit floats. Each block ends with a '#' footer naming
// the grid argmin of tau_qsl; ideal-Markov JC curves also get the analytic
// critical time.
void write_scan(std::ostream& os, const ScanConfig& cfg,
                const std::vector<std::vector<ScanRow>>& blocks);

// evaluate_curve over every configured curve + write_scan to output_path.
void run_scan(const ScanConfig& cfg);

// Figure presets: damped JC from the excited state with gamma0 = 0.1 (fig1a)
// or gamma0 = 10 (fig1b) at lambda = omega0 = tau_d = 1, and the dephasing
// family s in {0.5, 1, 3} x C in {0.25, 0.5, 1} at eta = omega_c = tau_d = 1
// (fig2). Grid [0, 20] step 0.02 throughout.
ScanConfig preset_fig1a();
ScanConfig preset_fig1b();
ScanConfig preset_fig2();

struct UnruhSweepConfig {
    CurveSpec curve;  // inertial channel and initial state
    LinearGrid tau_grid;
    LinearGrid a_grid;
    double varpi = 1.0;
    double c = 1.0;
    double tau_d = 1.0;
    QuadratureSpec quadrature;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    int threads = 1;

    void validate() const;
};

struct UnruhRow {
    double acceleration = 0.0;
    double cos_r = 0.0;
    ScanRow row;
};

// Rows ordered by (a, tau); scan columns plus trailing a and cos_r.
std::vector<UnruhRow> evaluate_unruh_sweep(const UnruhSweepConfig& cfg);
void write_unruh_sweep(std::ostream& os, const UnruhSweepConfig& cfg,
                       const std::vector<UnruhRow>& rows);
void run_unruh_sweep(const UnruhSweepConfig& cfg);

// Shared 12-significant-digit float formatting.
std::string format_value(double x);

}  // namespace qsl
