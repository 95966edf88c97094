#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "output.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/evolve.hpp"
#include "qgeom/free_energy.hpp"
#include "qgeom/gauge.hpp"
#include "qgeom/phase.hpp"

using namespace qgeom;

namespace qgeom_cli {

CommonOptions CommonOptions::normalized() const {
    CommonOptions c = *this;
    if (c.degrees) {
        const double to_rad = std::numbers::pi / 180.0;
        c.theta *= to_rad;
        c.gamma1 *= to_rad;
        c.gamma2 *= to_rad;
        c.degrees = false;
    }
    return c;
}

TwoLevelParams CommonOptions::params() const {
    return make_params(omega1, omega2, theta, gamma1, gamma2);
}

namespace {

void push_common_meta(Report& r, const std::string& command,
                      const CommonOptions& c) {
    r.meta.emplace_back("command", command);
    r.meta.emplace_back("omega1", format_number(c.omega1));
    r.meta.emplace_back("omega2", format_number(c.omega2));
    r.meta.emplace_back("theta", format_number(c.theta));
    r.meta.emplace_back("gamma1", format_number(c.gamma1));
    r.meta.emplace_back("gamma2", format_number(c.gamma2));
    r.meta.emplace_back("format", c.format);
}

void push_timestamp(Report& r, const CommonOptions& c) {
    if (c.reproducible) return;
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    r.meta.emplace_back("timestamp", buf);
}

StateSelector parse_selector(const std::string& name) {
    if (name == "phi") return StateSelector::Phi;
    if (name == "psi") return StateSelector::Psi;
    throw std::invalid_argument("selector must be phi or psi");
}

std::vector<double> parse_time_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        while (end && *end == ' ') ++end;
        if (end == token.c_str() || (end && *end != '\0') ||
            !std::isfinite(v))
            throw std::invalid_argument(
                "--t expects comma-separated finite numbers");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("--t expects at least one time value");
    return out;
}

} // namespace

int cmd_evolve(const CommonOptions& common, const EvolveOptions& o) {
    const CommonOptions c = common.normalized();
    if (o.points < 2)
        throw std::invalid_argument("evolve needs --points >= 2");
    const TwoLevelParams p = c.params();
    const StateSelector sel = parse_selector(o.selector);

    Report r;
    push_common_meta(r, "evolve", c);
    r.meta.emplace_back("selector", o.selector);
    r.meta.emplace_back("t-max", format_number(o.t_max));
    r.meta.emplace_back("points", std::to_string(o.points));
    r.meta.emplace_back("oracle", o.oracle ? "true" : "false");
    r.meta.emplace_back("dt", format_number(o.dt));
    push_timestamp(r, c);

    r.columns = {"t",    "re0",        "im0",
                 "re1",  "im1",        "norm",
                 "overlap_re", "overlap_im"};
    if (o.oracle) {
        r.columns.insert(r.columns.end(), {"rk4_re0", "rk4_im0", "rk4_re1",
                                           "rk4_im1", "deviation"});
    }

    const QubitState start = evolve_state(p, sel, 0.0);
    QubitState carried = start;
    double prev_t = 0.0;
    for (long j = 0; j < o.points; ++j) {
        const double t = o.t_max * static_cast<double>(j) /
                         static_cast<double>(o.points - 1);
        const QubitState s = evolve_state(p, sel, t);
        const Complex overlap = inner(start, s);
        std::vector<Cell> row = {t,
                                 s.amp0.real(),
                                 s.amp0.imag(),
                                 s.amp1.real(),
                                 s.amp1.imag(),
                                 norm(s),
                                 overlap.real(),
                                 overlap.imag()};
        if (o.oracle) {
            carried = evolve_numeric(p, carried, t - prev_t, o.dt);
            prev_t = t;
            row.insert(row.end(),
                       {carried.amp0.real(), carried.amp0.imag(),
                        carried.amp1.real(), carried.amp1.imag(),
                        max_component_diff(s, carried)});
        }
        r.rows.push_back(std::move(row));
    }
    return write_report(r, c.format, c.output);
}

int cmd_phase(const CommonOptions& common, const PhaseOptions& o) {
    const CommonOptions c = common.normalized();
    const TwoLevelParams p = c.params();

    Report r;
    push_common_meta(r, "phase", c);
    r.meta.emplace_back("n", std::to_string(o.n));
    r.meta.emplace_back("steps", std::to_string(o.steps));
    r.meta.emplace_back("samples", std::to_string(o.samples));
    r.meta.emplace_back("f0", format_number(o.f0));
    push_timestamp(r, c);

    r.columns = {"selector",
                 "total",
                 "dynamical",
                 "geometric",
                 "geometric_numeric",
                 "pancharatnam",
                 "residual_closure",
                 "residual_numeric",
                 "residual_pancharatnam"};

    for (StateSelector sel : {StateSelector::Phi, StateSelector::Psi}) {
        const PhaseDecomposition d = phase_decomposition(p, sel, o.n);
        const double numeric =
            geometric_phase_numeric(p, sel, o.n, o.steps, o.f0);
        const double pancharatnam = pancharatnam_phase(
            trajectory_samples(p, sel, o.n, o.samples));
        r.rows.push_back({sel == StateSelector::Phi ? "phi" : "psi",
                          d.total, d.dynamical, d.geometric, numeric,
                          pancharatnam, std::abs(d.residual),
                          std::abs(numeric - d.geometric),
                          std::abs(angle_distance(pancharatnam, d.geometric))});
    }
    return write_report(r, c.format, c.output);
}

int cmd_gauge_check(const CommonOptions& common, const GaugeCheckOptions& o) {
    const CommonOptions c = common.normalized();
    const TwoLevelParams p = c.params();
    const std::vector<double> times = parse_time_list(o.times);

    struct LambdaChoice {
        std::string name;
        std::function<double(double)> value;
        std::function<double(double)> rate;
    };
    std::vector<LambdaChoice> lambdas;
    const auto want = [&](const std::string& name) {
        return o.lambda == "all" || o.lambda == name;
    };
    if (want("zero"))
        lambdas.push_back({"zero", [](double) { return 0.0; },
                           [](double) { return 0.0; }});
    if (want("linear"))
        lambdas.push_back({"linear",
                           [s = o.slope](double t) { return s * t; },
                           [s = o.slope](double) { return s; }});
    if (want("sin"))
        lambdas.push_back({"sin", [](double t) { return std::sin(t); },
                           [](double t) { return std::cos(t); }});
    if (lambdas.empty())
        throw std::invalid_argument(
            "--lambda must be one of all, zero, linear, sin");

    Report r;
    push_common_meta(r, "gauge-check", c);
    r.meta.emplace_back("t", o.times);
    r.meta.emplace_back("f0", format_number(o.f0));
    r.meta.emplace_back("n", std::to_string(o.n));
    r.meta.emplace_back("slope", format_number(o.slope));
    r.meta.emplace_back("lambda", o.lambda);
    push_timestamp(r, c);

    r.columns = {"check", "t", "lambda", "residual", "tolerance", "status"};

    int failures = 0;
    int skips = 0;
    const auto add = [&](const std::string& check, const Cell& t_cell,
                         const std::string& lambda_name, double residual,
                         double tolerance) {
        const bool ok = residual < tolerance;
        if (!ok) ++failures;
        r.rows.push_back({check, t_cell, lambda_name, residual, tolerance,
                          ok ? "pass" : "fail"});
    };
    const auto add_skip = [&](const std::string& check, const Cell& t_cell,
                              const std::string& lambda_name,
                              double tolerance) {
        ++skips;
        r.rows.push_back({check, t_cell, lambda_name, nullptr, tolerance,
                          "skipped: infinite coupling"});
    };

    for (double t : times) {
        const auto [cycled, base] = tilde_overlap_invariance(p, o.f0, o.n, t);
        add("tilde-overlap-invariance", t, "-", std::abs(cycled - base),
            1e-12);
    }
    for (double t : times)
        add("filtered-evolution-fd", t, "-",
            filtered_evolution_residual(p, o.f0, t), 1e-7);
    for (double t : times)
        add("filtered-evolution-analytic", t, "-",
            filtered_evolution_residual_analytic(p, o.f0, t), 1e-12);
    for (double t : times)
        add("doublet-motion-fd", t, "-", doublet_motion_residual(p, t), 1e-7);
    for (double t : times)
        add("doublet-motion-analytic", t, "-",
            doublet_motion_residual_analytic(p, t), 1e-12);

    try {
        const double strength = field_strength(p, std::span(times));
        add("field-strength-constancy", nullptr, "-", strength, 1e-12);
    } catch (const InfiniteCouplingError&) {
        add_skip("field-strength-constancy", nullptr, "-", 1e-12);
    }

    for (const LambdaChoice& lam : lambdas) {
        for (double t : times) {
            try {
                const GaugeFieldTransform shift =
                    gauge_field_transform(p, lam.value, lam.rate, t);
                add("transformation-law", t, lam.name, shift.law_residual,
                    1e-10);
            } catch (const InfiniteCouplingError&) {
                add_skip("transformation-law", t, lam.name, 1e-10);
            }
            try {
                add("motion-covariance", t, lam.name,
                    transformed_motion_residual(p, lam.value, lam.rate, t),
                    1e-6);
            } catch (const InfiniteCouplingError&) {
                add_skip("motion-covariance", t, lam.name, 1e-6);
            }
        }
    }

    const int write_rc = write_report(r, c.format, c.output);
    if (write_rc != 0) return write_rc;
    if (failures > 0) return 1;
    if (skips > 0) return 3;
    return 0;
}

int cmd_invariant(const CommonOptions& common, const InvariantOptions& o) {
    const CommonOptions c = common.normalized();
    const TwoLevelParams p = c.params();

    const GeometricInvariant closed = aa_invariant(p, o.n);
    const double numeric = entropy_action_integral(p, o.n, o.steps);

    const Operator2 h = Operator2::diagonal(p.omega1, p.omega2);
    double closure = 0.0;
    const double span = std::abs(p.period());
    for (int j = 0; j < 100; ++j) {
        const double t = span * static_cast<double>(j) / 99.0;
        closure = std::max(
            closure,
            max_abs_diff(free_energy_operator(p, t) + entropy_term(p, t), h));
    }

    const auto [spread, element] = variance_link(p, o.t);

    Report r;
    push_common_meta(r, "invariant", c);
    r.meta.emplace_back("n", std::to_string(o.n));
    r.meta.emplace_back("steps", std::to_string(o.steps));
    r.meta.emplace_back("t", format_number(o.t));
    push_timestamp(r, c);

    r.columns = {"quantity", "value"};
    r.rows.push_back({"s_closed", closed.s_n});
    r.rows.push_back({"s_numeric", numeric});
    r.rows.push_back({"s_abs_error", std::abs(numeric - closed.s_n)});
    r.rows.push_back({"closure_residual", closure});
    r.rows.push_back({"variance_spread", spread});
    r.rows.push_back({"variance_element", element});
    return write_report(r, c.format, c.output);
}

int cmd_sweep(const CommonOptions& common, const SweepOptions& o) {
    const CommonOptions c = common.normalized();
    if (o.count < 2)
        throw std::invalid_argument("sweep needs --count >= 2");
    if (o.start == o.stop)
        throw std::invalid_argument("sweep needs --start != --stop");

    std::vector<std::string> quantities;
    if (o.quantity == "all")
        quantities = {"beta_phi", "beta_psi", "s_n"};
    else if (o.quantity == "beta_phi" || o.quantity == "beta_psi" ||
             o.quantity == "s_n")
        quantities = {o.quantity};
    else
        throw std::invalid_argument(
            "--quantity must be one of all, beta_phi, beta_psi, s_n");

    Report r;
    push_common_meta(r, "sweep", c);
    r.meta.emplace_back("param", o.param);
    r.meta.emplace_back("start", format_number(o.start));
    r.meta.emplace_back("stop", format_number(o.stop));
    r.meta.emplace_back("count", std::to_string(o.count));
    r.meta.emplace_back("n", std::to_string(o.n));
    r.meta.emplace_back("steps", std::to_string(o.steps));
    r.meta.emplace_back("quantity", o.quantity);
    push_timestamp(r, c);

    r.columns = {"swept_value", "quantity", "closed_form", "numeric",
                 "abs_error"};

    for (long j = 0; j < o.count; ++j) {
        const double value =
            o.start + (o.stop - o.start) * static_cast<double>(j) /
                          static_cast<double>(o.count - 1);
        TwoLevelParams p = c.params();
        int n = o.n;
        Cell swept = value;
        if (o.param == "theta") {
            p = make_params(c.omega1, c.omega2, value, c.gamma1, c.gamma2);
        } else if (o.param == "omega1") {
            p = make_params(value, c.omega2, c.theta, c.gamma1, c.gamma2);
        } else if (o.param == "omega2") {
            p = make_params(c.omega1, value, c.theta, c.gamma1, c.gamma2);
        } else if (o.param == "n") {
            const long rounded = std::lround(value);
            if (rounded < 1)
                throw std::invalid_argument("swept n values must be >= 1");
            n = static_cast<int>(rounded);
            swept = rounded;
        } else {
            throw std::invalid_argument(
                "--param must be one of theta, omega1, omega2, n");
        }

        for (const std::string& q : quantities) {
            double closed = 0.0;
            double numeric = 0.0;
            if (q == "beta_phi" || q == "beta_psi") {
                const StateSelector sel = q == "beta_phi"
                                              ? StateSelector::Phi
                                              : StateSelector::Psi;
                closed = geometric_phase(p, sel, n);
                numeric = geometric_phase_numeric(p, sel, n, o.steps);
            } else {
                closed = aa_invariant(p, n).s_n;
                numeric = entropy_action_integral(p, n, o.steps);
            }
            r.rows.push_back(
                {swept, q, closed, numeric, std::abs(closed - numeric)});
        }
    }
    return write_report(r, c.format, c.output);
}

} // namespace qgeom_cli
