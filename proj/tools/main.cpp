// qsl command-line front end: tau scans, figure presets, accelerated-observer
// sweeps, and the oracle verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl/scan.hpp"
#include "qsl/verify.hpp"

namespace {

using nlohmann::json;

struct CliArgs {
    std::string model = "jc";
    double gamma0 = 0.1;
    double lambda = 1.0;
    double omega0 = 1.0;
    std::string mode = "exact";
    double eta = 1.0;
    double omega_c = 1.0;
    double kappa = 1.0;
    std::string s_list = "1";
    double coh = 1.0;
    std::string bloch;
    std::string tau_grid = "0:20:0.02";
    double tau_d = 1.0;
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    std::string out;
    std::string format = "csv";
    int threads = 1;
    std::string config;
    // accelerated-frame sweep
    std::string a_grid = "0.5:10:0.5";
    double varpi = 1.0;
    double c_light = 1.0;
};

qsl::LinearGrid parse_grid(const std::string& text, const char* what) {
    qsl::LinearGrid grid;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &grid.start, &grid.stop, &grid.step,
                    &trailing) != 3) {
        throw std::invalid_argument(std::string(what) + ": expected start:stop:step, got '" +
                                    text + "'");
    }
    grid.validate();
    return grid;
}

qsl::BlochVector parse_bloch(const std::string& text) {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &x, &y, &z, &trailing) != 3) {
        throw std::invalid_argument("--bloch: expected vx,vy,vz, got '" + text + "'");
    }
    return {x, y, z};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

qsl::OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return qsl::OutputFormat::csv;
    if (text == "plotdata") return qsl::OutputFormat::plotdata;
    throw std::invalid_argument("--format: expected csv or plotdata, got '" + text + "'");
}

// Fill every option the command line left untouched from the JSON config.
// Keys are the long flag names with '-' replaced by '_'.
void apply_config_file(const CliArgs& args, CLI::App* cmd, CliArgs& out) {
    std::ifstream in(args.config);
    if (!in) throw std::invalid_argument("--config: cannot open " + args.config);
    json doc = json::parse(in);

    const auto unused = [cmd](const std::string& flag) {
        const CLI::Option* opt = cmd->get_option_no_throw("--" + flag);
        return opt == nullptr || opt->count() == 0;
    };
    const auto load_double = [&](const char* key, double& target) {
        std::string flag(key);
        for (auto& ch : flag) {
            if (ch == '_') ch = '-';
        }
        if (doc.contains(key) && unused(flag)) target = doc.at(key).get<double>();
    };
    const auto load_int = [&](const char* key, int& target) {
        if (doc.contains(key) && unused(key)) target = doc.at(key).get<int>();
    };
    const auto load_string = [&](const char* key, std::string& target) {
        std::string flag(key);
        for (auto& ch : flag) {
            if (ch == '_') ch = '-';
        }
        if (!doc.contains(key) || !unused(flag)) return;
        const json& value = doc.at(key);
        if (value.is_array()) {  // list-valued keys: join as a comma list
            std::string joined;
            for (const auto& element : value) {
                if (!joined.empty()) joined += ',';
                joined += qsl::format_value(element.get<double>());
            }
            target = joined;
        } else if (value.is_number()) {
            target = qsl::format_value(value.get<double>());
        } else {
            target = value.get<std::string>();
        }
    };

    load_string("model", out.model);
    load_double("gamma0", out.gamma0);
    load_double("lambda", out.lambda);
    load_double("omega0", out.omega0);
    load_string("mode", out.mode);
    load_double("eta", out.eta);
    load_double("omega_c", out.omega_c);
    load_double("kappa", out.kappa);
    load_string("s", out.s_list);
    load_double("coh", out.coh);
    load_string("bloch", out.bloch);
    load_string("tau_grid", out.tau_grid);
    load_double("tau_d", out.tau_d);
    load_double("abs_tol", out.abs_tol);
    load_double("rel_tol", out.rel_tol);
    load_string("out", out.out);
    load_string("format", out.format);
    load_int("threads", out.threads);
    load_string("a_grid", out.a_grid);
    load_double("varpi", out.varpi);
    load_double("c", out.c_light);
}

qsl::BlochVector initial_state(const CliArgs& args, CLI::App* cmd, bool dephasing) {
    const bool coh_given = cmd->get_option_no_throw("--coh") != nullptr &&
                           cmd->count("--coh") > 0;
    if (!args.bloch.empty()) return parse_bloch(args.bloch);
    if (coh_given || dephasing) {
        if (!(args.coh >= 0.0) || args.coh > 1.0) {
            throw std::invalid_argument("--coh: coherence must lie in [0, 1]");
        }
        return {std::sqrt(args.coh), 0.0, 0.0};
    }
    return {0.0, 0.0, -1.0};  // JC default: the excited state
}

qsl::JcMode parse_mode(const std::string& text) {
    if (text == "exact") return qsl::JcMode::exact;
    if (text == "ideal-markov") return qsl::JcMode::ideal_markov;
    throw std::invalid_argument("--mode: expected exact or ideal-markov, got '" + text + "'");
}

std::vector<qsl::CurveSpec> build_curves(const CliArgs& args, CLI::App* cmd) {
    std::vector<qsl::CurveSpec> curves;
    if (args.model == "jc") {
        if (cmd->count("--s") > 0) {
            throw std::invalid_argument("--s applies to the dephasing model only");
        }
        const qsl::DampedJCParams params{args.gamma0, args.lambda, args.omega0};
        curves.push_back({qsl::ChannelModel::damped_jc(params, parse_mode(args.mode)),
                          initial_state(args, cmd, false), ""});
    } else if (args.model == "dephasing") {
        if (cmd->count("--mode") > 0) {
            throw std::invalid_argument("--mode applies to the JC model only");
        }
        const auto s_values = parse_list(args.s_list, "--s");
        const qsl::BlochVector v0 = initial_state(args, cmd, true);
        for (double s : s_values) {
            const qsl::OhmicParams params{args.eta, s, args.omega_c, args.kappa};
            std::string label;
            if (s_values.size() > 1) label = "s = " + qsl::format_value(s);
            curves.push_back({qsl::ChannelModel::ohmic_dephasing(params), v0, label});
        }
    } else {
        throw std::invalid_argument("--model: expected jc or dephasing, got '" + args.model +
                                    "'");
    }
    return curves;
}

int do_scan(CliArgs args, CLI::App* cmd) {
    if (!args.config.empty()) apply_config_file(args, cmd, args);
    qsl::ScanConfig cfg;
    cfg.curves = build_curves(args, cmd);
    cfg.tau_grid = parse_grid(args.tau_grid, "--tau-grid");
    cfg.tau_d = args.tau_d;
    cfg.quadrature.abs_tol = args.abs_tol;
    cfg.quadrature.rel_tol = args.rel_tol;
    cfg.output_path = args.out.empty() ? "scan.csv" : args.out;
    cfg.format = parse_format(args.format);
    cfg.threads = args.threads;
    qsl::run_scan(cfg);
    std::cout << "wrote " << cfg.output_path << '\n';
    return 0;
}

int do_unruh(CliArgs args, CLI::App* cmd) {
    if (!args.config.empty()) apply_config_file(args, cmd, args);
    auto curves = build_curves(args, cmd);
    if (curves.size() != 1) {
        throw std::invalid_argument("unruh: the sweep takes a single curve (one s value)");
    }
    qsl::UnruhSweepConfig cfg{curves.front(),
                              parse_grid(args.tau_grid, "--tau-grid"),
                              parse_grid(args.a_grid, "--a-grid"),
                              args.varpi,
                              args.c_light,
                              args.tau_d,
                              {},
                              args.out.empty() ? "unruh.csv" : args.out,
                              parse_format(args.format),
                              args.threads};
    cfg.quadrature.abs_tol = args.abs_tol;
    cfg.quadrature.rel_tol = args.rel_tol;
    qsl::run_unruh_sweep(cfg);
    std::cout << "wrote " << cfg.output_path << '\n';
    return 0;
}

int do_preset(const std::string& name, const CliArgs& args, CLI::App* cmd) {
    qsl::ScanConfig cfg;
    if (name == "fig1a") {
        cfg = qsl::preset_fig1a();
    } else if (name == "fig1b") {
        cfg = qsl::preset_fig1b();
    } else {
        cfg = qsl::preset_fig2();
    }
    if (cmd->count("--out") > 0) cfg.output_path = args.out;
    if (cmd->count("--format") > 0) cfg.format = parse_format(args.format);
    if (cmd->count("--abs-tol") > 0) cfg.quadrature.abs_tol = args.abs_tol;
    if (cmd->count("--rel-tol") > 0) cfg.quadrature.rel_tol = args.rel_tol;
    cfg.threads = args.threads;
    qsl::run_scan(cfg);
    std::cout << "wrote " << cfg.output_path << '\n';
    return 0;
}

int do_verify(const CliArgs& args) {
    qsl::VerifyOptions opts;
    opts.quadrature.abs_tol = args.abs_tol;
    opts.quadrature.rel_tol = args.rel_tol;
    opts.kappa = args.kappa;
    const auto results = qsl::run_verify(opts);
    const bool ok = qsl::print_verify_report(std::cout, results);
    if (!ok) {
        std::cerr << "verify: one or more checks failed\n";
        return 2;
    }
    return 0;
}

void add_common_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--tau-grid", args.tau_grid, "tau grid as start:stop:step");
    cmd->add_option("--tau-d", args.tau_d, "driving time tau_D");
    cmd->add_option("--abs-tol", args.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--rel-tol", args.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--out", args.out, "output file path");
    cmd->add_option("--format", args.format, "output format: csv or plotdata");
    cmd->add_option("--threads", args.threads, "worker threads for grid evaluation");
    cmd->add_option("--config", args.config, "JSON config file (flags override file values)");
}

void add_model_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--model", args.model, "channel model: jc or dephasing");
    cmd->add_option("--gamma0", args.gamma0, "JC coupling strength");
    cmd->add_option("--lambda", args.lambda, "JC spectral width");
    cmd->add_option("--omega0", args.omega0, "JC qubit frequency (inert)");
    cmd->add_option("--mode", args.mode, "JC dynamics: exact or ideal-markov");
    cmd->add_option("--eta", args.eta, "dephasing coupling");
    cmd->add_option("--s", args.s_list, "Ohmicity parameter(s), comma list");
    cmd->add_option("--omega-c", args.omega_c, "dephasing cutoff frequency");
    cmd->add_option("--kappa", args.kappa, "dephasing exponent convention multiplier");
    auto* coh = cmd->add_option("--coh", args.coh, "initial coherence C in [0, 1]");
    auto* bloch = cmd->add_option("--bloch", args.bloch, "initial Bloch vector vx,vy,vz");
    coh->excludes(bloch);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-speed-limit scans for open qubit channels"};
    app.require_subcommand(1);

    CliArgs args;

    CLI::App* scan = app.add_subcommand("scan", "tau scan of the unified speed-limit bound");
    add_model_options(scan, args);
    add_common_options(scan, args);

    CLI::App* unruh =
        app.add_subcommand("unruh", "scan repeated over an acceleration grid");
    add_model_options(unruh, args);
    add_common_options(unruh, args);
    unruh->add_option("--a-grid", args.a_grid, "acceleration grid as start:stop:step");
    unruh->add_option("--varpi", args.varpi, "central frequency of the wave packet");
    unruh->add_option("--c", args.c_light, "speed of light");

    std::string preset_name;
    CLI::App* preset = app.add_subcommand("preset", "run a canned figure configuration");
    preset->add_option("name", preset_name, "one of fig1a, fig1b, fig2")
        ->required()
        ->check(CLI::IsMember({"fig1a", "fig1b", "fig2"}));
    preset->add_option("--out", args.out, "output file path");
    preset->add_option("--format", args.format, "output format: csv or plotdata");
    preset->add_option("--threads", args.threads, "worker threads");
    preset->add_option("--abs-tol", args.abs_tol, "quadrature absolute tolerance");
    preset->add_option("--rel-tol", args.rel_tol, "quadrature relative tolerance");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    verify->add_option("--kappa", args.kappa, "dephasing exponent convention multiplier");
    verify->add_option("--abs-tol", args.abs_tol, "quadrature absolute tolerance");
    verify->add_option("--rel-tol", args.rel_tol, "quadrature relative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (scan->parsed()) return do_scan(args, scan);
        if (unruh->parsed()) return do_unruh(args, unruh);
        if (preset->parsed()) return do_preset(preset_name, args, preset);
        if (verify->parsed()) return do_verify(args);
    } catch (const qsl::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
