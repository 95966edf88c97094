#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "qgeom/errors.hpp"

namespace {

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

/// Reads a flat key=value file into `--key=value` tokens.
std::vector<std::string> load_config_tokens(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot read config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(file, line)) {
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " +
                                        text);
        const std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line has an empty key: " +
                                        text);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

/// Splices config-file entries in after the subcommand token, skipping
/// keys also given on the command line so explicit flags win.
void apply_config_file(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty() || args.empty() || args[0].empty() ||
        args[0][0] == '-')
        return;

    std::vector<std::string> extra;
    for (const std::string& token : load_config_tokens(path)) {
        const std::string key = token.substr(0, token.find('='));
        bool given = false;
        for (std::size_t i = 1; i < args.size() && !given; ++i)
            given = args[i] == key || args[i].rfind(key + "=", 0) == 0;
        if (!given) extra.push_back(token);
    }
    args.insert(args.begin() + 1, extra.begin(), extra.end());
}

void add_common_options(CLI::App* sub, qgeom_cli::CommonOptions& c) {
    sub->add_option("--omega1", c.omega1, "Lower-level angular frequency")
        ->capture_default_str();
    sub->add_option("--omega2", c.omega2, "Upper-level angular frequency")
        ->capture_default_str();
    sub->add_option("--theta", c.theta,
                    "Mixing angle (radians unless --degrees)")
        ->capture_default_str();
    sub->add_option("--gamma1", c.gamma1, "Preparation phase of the |0> part")
        ->capture_default_str();
    sub->add_option("--gamma2", c.gamma2, "Preparation phase of the |1> part")
        ->capture_default_str();
    sub->add_flag("--degrees", c.degrees,
                  "Interpret the angle options as degrees on input");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "Write to this file instead of stdout");
    sub->add_option("--config", c.config,
                    "Flat key=value config file; explicit flags override it");
    sub->add_flag("--reproducible", c.reproducible,
                  "Omit the timestamp from the metadata header");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level evolution, phase, gauge and invariant workbench"};
    app.require_subcommand(1);

    qgeom_cli::CommonOptions common_evolve, common_phase, common_gauge,
        common_invariant, common_sweep;
    qgeom_cli::EvolveOptions evolve_opts;
    qgeom_cli::PhaseOptions phase_opts;
    qgeom_cli::GaugeCheckOptions gauge_opts;
    qgeom_cli::InvariantOptions invariant_opts;
    qgeom_cli::SweepOptions sweep_opts;
    int rc = 0;

    CLI::App* evolve =
        app.add_subcommand("evolve", "Tabulate a state trajectory");
    add_common_options(evolve, common_evolve);
    evolve->add_option("--selector", evolve_opts.selector, "State to evolve")
        ->check(CLI::IsMember({"phi", "psi"}))
        ->capture_default_str();
    evolve->add_option("--t-max", evolve_opts.t_max, "End of the time grid")
        ->capture_default_str();
    evolve->add_option("--points", evolve_opts.points, "Grid points (>= 2)")
        ->capture_default_str();
    evolve->add_flag("--oracle", evolve_opts.oracle,
                     "Add integrator cross-check columns");
    evolve->add_option("--dt", evolve_opts.dt, "Integrator step for --oracle")
        ->capture_default_str();
    evolve->callback(
        [&] { rc = qgeom_cli::cmd_evolve(common_evolve, evolve_opts); });

    CLI::App* phase = app.add_subcommand(
        "phase", "Total/dynamical/geometric phase decomposition");
    add_common_options(phase, common_phase);
    phase->add_option("--n", phase_opts.n, "Cycle count")
        ->capture_default_str();
    phase->add_option("--steps", phase_opts.steps,
                      "Quadrature steps for the numeric geometric phase")
        ->capture_default_str();
    phase->add_option("--samples", phase_opts.samples,
                      "Samples for the discrete-overlap product")
        ->capture_default_str();
    phase->add_option("--f0", phase_opts.f0,
                      "Gauge offset for the numeric geometric phase")
        ->capture_default_str();
    phase->callback(
        [&] { rc = qgeom_cli::cmd_phase(common_phase, phase_opts); });

    CLI::App* gauge = app.add_subcommand(
        "gauge-check", "Run the gauge residual suite against tolerances");
    add_common_options(gauge, common_gauge);
    gauge->add_option("--t", gauge_opts.times,
                      "Comma-separated evaluation times")
        ->capture_default_str();
    gauge->add_option("--f0", gauge_opts.f0, "Gauge function offset")
        ->capture_default_str();
    gauge->add_option("--n", gauge_opts.n,
                      "Cycle count for the overlap-invariance check")
        ->capture_default_str();
    gauge->add_option("--slope", gauge_opts.slope,
                      "Slope of the linear gauge shift")
        ->capture_default_str();
    gauge->add_option("--lambda", gauge_opts.lambda,
                      "Gauge shift family to exercise")
        ->check(CLI::IsMember({"all", "zero", "linear", "sin"}))
        ->capture_default_str();
    gauge->callback(
        [&] { rc = qgeom_cli::cmd_gauge_check(common_gauge, gauge_opts); });

    CLI::App* invariant = app.add_subcommand(
        "invariant", "Cycle invariant, entropy action and variance report");
    add_common_options(invariant, common_invariant);
    invariant->add_option("--n", invariant_opts.n, "Cycle count")
        ->capture_default_str();
    invariant->add_option("--steps", invariant_opts.steps,
                          "Quadrature steps for the entropy action")
        ->capture_default_str();
    invariant->add_option("--t", invariant_opts.t,
                          "Evaluation time for the variance pair")
        ->capture_default_str();
    invariant->callback([&] {
        rc = qgeom_cli::cmd_invariant(common_invariant, invariant_opts);
    });

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep one parameter and tabulate closed vs numeric values");
    add_common_options(sweep, common_sweep);
    sweep->add_option("--param", sweep_opts.param, "Parameter to sweep")
        ->check(CLI::IsMember({"theta", "omega1", "omega2", "n"}))
        ->required();
    sweep->add_option("--start", sweep_opts.start, "First swept value")
        ->required();
    sweep->add_option("--stop", sweep_opts.stop, "Last swept value")
        ->required();
    sweep->add_option("--count", sweep_opts.count, "Sweep points (>= 2)")
        ->capture_default_str();
    sweep->add_option("--n", sweep_opts.n, "Cycle count when not swept")
        ->capture_default_str();
    sweep->add_option("--steps", sweep_opts.steps,
                      "Quadrature steps for the numeric columns")
        ->capture_default_str();
    sweep->add_option("--quantity", sweep_opts.quantity,
                      "Quantity to tabulate")
        ->check(CLI::IsMember({"all", "beta_phi", "beta_psi", "s_n"}))
        ->capture_default_str();
    sweep->callback(
        [&] { rc = qgeom_cli::cmd_sweep(common_sweep, sweep_opts); });

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        apply_config_file(args);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qgeom::NonFiniteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qgeom::StepTooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qgeom::DegenerateSpectrumError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const qgeom::InfiniteCouplingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const qgeom::ZeroOverlapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qgeom::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
