#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string temp_name(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/qgeom_cli_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = temp_name(".out");
    const std::string err_path = temp_name(".err");
    const std::string command = std::string("\"") + QGEOM_CLI_PATH + "\" " +
                                args + " > \"" + out_path + "\" 2> \"" +
                                err_path + "\"";
    const int status = std::system(command.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

struct Csv {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(line);
    std::string token;
    while (std::getline(stream, token, sep)) out.push_back(token);
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream stream(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const std::string entry = line.substr(2);
            const auto eq = entry.find('=');
            REQUIRE(eq != std::string::npos);
            csv.meta.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
        } else if (!header_seen) {
            csv.header = split(line, ',');
            header_seen = true;
        } else {
            csv.rows.push_back(split(line, ','));
        }
    }
    return csv;
}

std::size_t column(const Csv& csv, const std::string& name) {
    for (std::size_t i = 0; i < csv.header.size(); ++i)
        if (csv.header[i] == name) return i;
    REQUIRE_MESSAGE(false, "missing column " << name);
    return 0;
}

double to_double(const std::string& text) {
    return std::strtod(text.c_str(), nullptr);
}

std::string meta_value(const Csv& csv, const std::string& key) {
    for (const auto& [k, v] : csv.meta)
        if (k == key) return v;
    return "";
}

} // namespace

TEST_CASE("reproducible runs are byte-identical") {
    const std::vector<std::string> invocations = {
        "evolve --points 20 --reproducible",
        "phase --steps 2000 --samples 500 --reproducible",
        "gauge-check --reproducible",
        "invariant --steps 2000 --reproducible",
        "sweep --param theta --start 0.1 --stop 1.4 --count 3 --steps 2000 "
        "--reproducible",
    };
    for (const std::string& base : invocations) {
        for (const char* format : {"csv", "json"}) {
            const std::string args = base + " --format " + format;
            const RunResult first = run_cli(args);
            const RunResult second = run_cli(args);
            CHECK(first.code == second.code);
            CHECK(first.out == second.out);
            CHECK(!first.out.empty());
        }
    }
}

TEST_CASE("metadata echo feeds back as an identical run") {
    const std::string flags =
        "phase --omega1 0.5 --omega2 3 --theta 1.0471975511965976 "
        "--steps 2000 --samples 500 --reproducible";
    const RunResult direct = run_cli(flags);
    REQUIRE(direct.code == 0);

    const Csv csv = parse_csv(direct.out);
    const std::string config_path = temp_name(".conf");
    {
        std::ofstream config(config_path);
        for (const auto& [key, value] : csv.meta)
            if (key != "command" && key != "timestamp")
                config << key << '=' << value << '\n';
    }
    const RunResult via_config =
        run_cli("phase --config \"" + config_path + "\" --reproducible");
    CHECK(via_config.code == 0);
    CHECK(via_config.out == direct.out);
    std::remove(config_path.c_str());
}

TEST_CASE("explicit flags override config-file values") {
    const std::string config_path = temp_name(".conf");
    {
        std::ofstream config(config_path);
        config << "omega1=7\nsteps=2000\nsamples=500\n";
    }
    const RunResult r = run_cli("phase --config \"" + config_path +
                                "\" --omega1 1 --reproducible");
    CHECK(r.code == 0);
    CHECK(meta_value(parse_csv(r.out), "omega1") == "1");
    std::remove(config_path.c_str());
}

TEST_CASE("degrees convert on input and never on output") {
    const RunResult degrees = run_cli(
        "phase --theta 30 --degrees --steps 2000 --samples 500 "
        "--reproducible");
    REQUIRE(degrees.code == 0);
    const double theta = to_double(meta_value(parse_csv(degrees.out), "theta"));
    CHECK(std::abs(theta - kPi / 6.0) < 1e-15);
}

TEST_CASE("json and csv encode the same values") {
    for (const std::string& base :
         {std::string("phase --steps 2000 --samples 500 --reproducible"),
          std::string("invariant --steps 2000 --reproducible")}) {
        const RunResult csv_run = run_cli(base + " --format csv");
        const RunResult json_run = run_cli(base + " --format json");
        REQUIRE(csv_run.code == 0);
        REQUIRE(json_run.code == 0);

        const Csv csv = parse_csv(csv_run.out);
        const nlohmann::json doc = nlohmann::json::parse(json_run.out);

        for (const auto& [key, value] : csv.meta)
            if (key != "format")
                CHECK(doc["meta"][key].get<std::string>() == value);

        REQUIRE(doc["data"].size() == csv.rows.size());
        for (std::size_t i = 0; i < csv.rows.size(); ++i) {
            for (std::size_t j = 0; j < csv.header.size(); ++j) {
                const auto& cell = doc["data"][i][csv.header[j]];
                if (cell.is_string())
                    CHECK(cell.get<std::string>() == csv.rows[i][j]);
                else
                    CHECK(cell.get<double>() == to_double(csv.rows[i][j]));
            }
        }
    }
}

TEST_CASE("exit-code contract") {
    CHECK(run_cli("phase --omega1 1 --omega2 1").code == 3);
    CHECK(run_cli("invariant --omega1 2 --omega2 2").code == 3);
    CHECK(run_cli("gauge-check --theta 0.78539816339744828").code == 3);
    CHECK(run_cli("evolve --points 1").code == 2);
    CHECK(run_cli("sweep --param theta --start 1 --stop 1 --count 4").code ==
          2);
    CHECK(run_cli("sweep --param theta --start 0 --stop 1 --count 1").code ==
          2);
    CHECK(run_cli("phase --nonsense 3").code == 2);
    CHECK(run_cli("evolve --oracle --dt 1").code == 2);
    CHECK(run_cli("gauge-check").code == 0);
    CHECK(run_cli("phase --steps 2000 --samples 500").code == 0);
}

TEST_CASE("singular gauge report marks skipped checks") {
    const RunResult r =
        run_cli("gauge-check --theta 0.78539816339744828 --reproducible");
    CHECK(r.code == 3);
    const Csv csv = parse_csv(r.out);
    const std::size_t status = column(csv, "status");
    const std::size_t check = column(csv, "check");
    int skipped = 0;
    for (const auto& row : csv.rows) {
        CHECK(row[status] != "fail");
        if (row[status] == "skipped: infinite coupling") {
            ++skipped;
            CHECK((row[check] == "transformation-law" ||
                   row[check] == "motion-covariance"));
        }
    }
    CHECK(skipped > 0);
}

TEST_CASE("failed residuals drive exit code 1") {
    // Large frequencies push the finite-difference checks past their
    // documented tolerances while the analytic ones stay clean.
    const RunResult r =
        run_cli("gauge-check --omega2 2000 --reproducible");
    CHECK(r.code == 1);
    const Csv csv = parse_csv(r.out);
    const std::size_t status = column(csv, "status");
    const std::size_t check = column(csv, "check");
    bool fd_failed = false;
    bool analytic_passed = false;
    for (const auto& row : csv.rows) {
        if (row[check] == "doublet-motion-fd" && row[status] == "fail")
            fd_failed = true;
        if (row[check] == "doublet-motion-analytic" && row[status] == "pass")
            analytic_passed = true;
    }
    CHECK(fd_failed);
    CHECK(analytic_passed);
}

TEST_CASE("evolve tabulates the advertised grid") {
    const RunResult r = run_cli(
        "evolve --omega1 1 --omega2 2 --theta 0.5236 --t-max 6.2832 "
        "--points 100 --format csv --reproducible");
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 100);
    const std::size_t norm_col = column(csv, "norm");
    const std::size_t t_col = column(csv, "t");
    for (const auto& row : csv.rows)
        CHECK(std::abs(to_double(row[norm_col]) - 1.0) < 1e-12);
    CHECK(to_double(csv.rows.front()[t_col]) == 0.0);
    CHECK(std::abs(to_double(csv.rows.back()[t_col]) - 6.2832) < 1e-15);
}

TEST_CASE("decoupled trajectory keeps the upper component empty") {
    const RunResult r =
        run_cli("evolve --theta 0 --points 40 --reproducible");
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    const std::size_t re1 = column(csv, "re1");
    const std::size_t im1 = column(csv, "im1");
    for (const auto& row : csv.rows) {
        CHECK(to_double(row[re1]) == 0.0);
        CHECK(to_double(row[im1]) == 0.0);
    }
}

TEST_CASE("oracle columns report the integrator deviation") {
    const RunResult r = run_cli(
        "evolve --oracle --dt 1e-3 --points 20 --t-max 6.2832 "
        "--reproducible");
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    const std::size_t dev = column(csv, "deviation");
    for (const auto& row : csv.rows)
        CHECK(to_double(row[dev]) < 1e-8);
}

TEST_CASE("phase report carries the closed forms and small residuals") {
    const RunResult r = run_cli(
        "phase --omega1 1 --omega2 2 --theta 0.52359877559829882 "
        "--steps 100000 --samples 10000 --reproducible");
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 2);
    const std::size_t sel = column(csv, "selector");
    const std::size_t geometric = column(csv, "geometric");
    const std::size_t closure = column(csv, "residual_closure");
    const std::size_t numeric = column(csv, "residual_numeric");
    const std::size_t pancharatnam = column(csv, "residual_pancharatnam");
    for (const auto& row : csv.rows) {
        const double expected =
            row[sel] == "phi" ? 0.5 * kPi : 1.5 * kPi;
        CHECK(std::abs(to_double(row[geometric]) - expected) < 1e-12);
        CHECK(to_double(row[closure]) < 1e-9);
        CHECK(to_double(row[numeric]) < 1e-6);
        CHECK(to_double(row[pancharatnam]) < 1e-4);
    }
}

TEST_CASE("output file matches the stdout stream") {
    const std::string path = temp_name(".csv");
    const RunResult to_file = run_cli(
        "invariant --steps 2000 --reproducible --output \"" + path + "\"");
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    const RunResult to_stdout = run_cli("invariant --steps 2000 --reproducible");
    CHECK(slurp(path) == to_stdout.out);
    std::remove(path.c_str());
}

TEST_CASE("sweep columns follow the closed forms") {
    SUBCASE("theta sweep of the lower geometric phase") {
        const RunResult r = run_cli(
            "sweep --param theta --start 0 --stop 1.5707963267948966 "
            "--count 9 --quantity beta_phi --steps 2000 --reproducible");
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 9);
        const std::size_t swept = column(csv, "swept_value");
        const std::size_t closed = column(csv, "closed_form");
        const std::size_t error = column(csv, "abs_error");
        for (const auto& row : csv.rows) {
            const double theta = to_double(row[swept]);
            const double s = std::sin(theta);
            CHECK(std::abs(to_double(row[closed]) - 2.0 * kPi * s * s) <
                  1e-12);
            CHECK(to_double(row[error]) < 1e-4);
        }
    }
    SUBCASE("frequency sweep leaves the geometric phase constant") {
        const RunResult r = run_cli(
            "sweep --param omega1 --start 0.2 --stop 1.8 --count 5 "
            "--quantity beta_phi --steps 2000 --reproducible");
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        const std::size_t closed = column(csv, "closed_form");
        const double first = to_double(csv.rows.front()[closed]);
        for (const auto& row : csv.rows)
            CHECK(to_double(row[closed]) == first);
    }
    SUBCASE("cycle-count sweep is linear in the invariant") {
        const RunResult r = run_cli(
            "sweep --param n --start 1 --stop 5 --count 5 --quantity s_n "
            "--steps 2000 --reproducible");
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 5);
        const std::size_t swept = column(csv, "swept_value");
        const std::size_t closed = column(csv, "closed_form");
        const double unit = to_double(csv.rows.front()[closed]);
        for (const auto& row : csv.rows)
            CHECK(std::abs(to_double(row[closed]) -
                           unit * to_double(row[swept])) < 1e-9);
    }
}
