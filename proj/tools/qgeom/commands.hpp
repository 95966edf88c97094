#ifndef QGEOM_TOOLS_COMMANDS_HPP
#define QGEOM_TOOLS_COMMANDS_HPP

#include <numbers>
#include <string>

#include "qgeom/params.hpp"

namespace qgeom_cli {

/// Options shared by every subcommand.  Angles are stored in radians;
/// `normalized()` folds a --degrees request into the stored values.
struct CommonOptions {
    double omega1 = 1.0;
    double omega2 = 2.0;
    double theta = std::numbers::pi / 6.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    bool degrees = false;
    std::string format = "csv";
    std::string output;
    std::string config;
    bool reproducible = false;

    CommonOptions normalized() const;
    qgeom::TwoLevelParams params() const;
};

struct EvolveOptions {
    std::string selector = "phi";
    double t_max = 2.0 * std::numbers::pi;
    long points = 100;
    bool oracle = false;
    double dt = 1e-4;
};

struct PhaseOptions {
    int n = 1;
    long steps = 100000;
    long samples = 10000;
    double f0 = 0.0;
};

struct GaugeCheckOptions {
    std::string times = "0.0,0.9,2.7";
    double f0 = 0.3;
    int n = 1;
    double slope = 0.7;
    std::string lambda = "all";
};

struct InvariantOptions {
    int n = 1;
    long steps = 10000;
    double t = 0.0;
};

struct SweepOptions {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    long count = 9;
    int n = 1;
    long steps = 10000;
    std::string quantity = "all";
};

int cmd_evolve(const CommonOptions& common, const EvolveOptions& o);
int cmd_phase(const CommonOptions& common, const PhaseOptions& o);
int cmd_gauge_check(const CommonOptions& common, const GaugeCheckOptions& o);
int cmd_invariant(const CommonOptions& common, const InvariantOptions& o);
int cmd_sweep(const CommonOptions& common, const SweepOptions& o);

} // namespace qgeom_cli

#endif
