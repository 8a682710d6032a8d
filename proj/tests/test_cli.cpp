// Integration tests driving the installed CLI binary end to end: exit codes,
// schema output, stdout values and byte-level determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "modbound/csv.hpp"
#include "modbound/scenarios.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const fs::path dir = fs::temp_directory_path() / "modbound_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / "stdout.txt";
    std::string cmd = env;
    if (!env.empty()) {
        cmd += " ";
    }
    cmd += std::string(MODBOUND_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.stdout_text = buf.str();
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "modbound_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("show-defaults and help paths exit cleanly") {
    CHECK(run_cli("--show-defaults").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("simulate writes a trajectory whose final T matches the library") {
    const fs::path out = temp_file("traj.csv");
    const RunResult res = run_cli("simulate --scenario zener --lambda 5 --steps 100000 "
                                  "--samples 50 --out " + out.string());
    REQUIRE(res.exit_code == 0);

    modbound::ZenerScenario sc{1.0, 5.0};
    const double t = sc.transmission(100000);
    CHECK(res.stdout_text == "T=" + modbound::format_double(t) + "\n");

    const std::string csv = slurp(out);
    CHECK(csv.rfind("# modbound csv trajectory v1\n", 0) == 0);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "s,p1,p2,p3,k1,k2,k3");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        double v[7];
        char comma;
        std::istringstream ls(line);
        ls >> v[0];
        for (int i = 1; i < 7; ++i) ls >> comma >> v[i];
        CHECK(std::abs(std::sqrt(v[1] * v[1] + v[2] * v[2] + v[3] * v[3]) - 1.0) < 1e-8);
        ++rows;
    }
    CHECK(rows == 50);
}

TEST_CASE("simulate with eps = 0 keeps the Bloch vector constant") {
    const fs::path out = temp_file("traj_const.csv");
    const RunResult res = run_cli(
        "simulate --scenario linear_birefringence --eps 0 --steps 1000 --samples 9 --out " +
        out.string());
    REQUIRE(res.exit_code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    double p1_first = 0, p2_first = 0, p3_first = 0;
    bool first = true;
    while (std::getline(in, line)) {
        double v[7];
        char comma;
        std::istringstream ls(line);
        ls >> v[0];
        for (int i = 1; i < 7; ++i) ls >> comma >> v[i];
        if (first) {
            p1_first = v[1];
            p2_first = v[2];
            p3_first = v[3];
            first = false;
        }
        CHECK(std::abs(v[1] - p1_first) < 1e-12);
        CHECK(std::abs(v[2] - p2_first) < 1e-12);
        CHECK(std::abs(v[3] - p3_first) < 1e-12);
    }
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
    const fs::path out1 = temp_file("sweep1.csv");
    const fs::path out2 = temp_file("sweep2.csv");
    const fs::path out4 = temp_file("sweep4.csv");
    const std::string base =
        "sweep --scenario zener --lambda-grid 0:2:21 --steps 4000 --out ";
    CHECK(run_cli(base + out1.string(), "MODBOUND_WORKERS=1").exit_code == 0);
    CHECK(run_cli(base + out2.string(), "MODBOUND_WORKERS=1").exit_code == 0);
    CHECK(run_cli(base + out4.string(), "MODBOUND_WORKERS=4").exit_code == 0);
    const std::string a = slurp(out1);
    CHECK(a == slurp(out2));
    CHECK(a == slurp(out4));
    CHECK(a.rfind("# modbound csv sweep v1\n", 0) == 0);

    // 21 grid rows + comment + header
    std::size_t lines = 0;
    for (char c : a) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 23);
}

TEST_CASE("sweep default grid yields 501 rows") {
    const fs::path out = temp_file("sweep_default.csv");
    CHECK(run_cli("sweep --scenario zener --steps 1000 --out " + out.string())
              .exit_code == 0);
    const std::string text = slurp(out);
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    // schema comment + header + 501 records
    CHECK(lines == 503);
}

TEST_CASE("unknown flags map to the config exit code") {
    CHECK(run_cli("sweep --scenario zener --no-such-flag 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("non-finite table values surface as a numerics failure") {
    const fs::path table = temp_file("overflow_base.tsv");
    {
        // interpolating between +-1e308 overflows to a non-finite kappa
        std::ofstream t(table);
        t << "0.0 0.0 1e308 0.0 0.0\n";
        t << "1.0 0.0 -1e308 0.0 0.0\n";
    }
    const fs::path cfg = temp_file("nan.cfg");
    {
        std::ofstream c(cfg);
        c << "scenario = custom_tabulated\n";
        c << "base_table = " << table.string() << "\n";
        c << "out = " << temp_file("nan_traj.csv").string() << "\n";
    }
    CHECK(run_cli("simulate --config " + cfg.string()).exit_code == 3);
}

TEST_CASE("sweep ratio column stays below the bound") {
    const fs::path out = temp_file("sweep_ratio.csv");
    CHECK(run_cli("sweep --scenario zener --lambda-grid 0.3:1.5:13 --steps 30000 --out " +
                  out.string())
              .exit_code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto last_comma = line.rfind(',');
        const double ratio = std::stod(line.substr(last_comma + 1));
        CHECK(ratio <= 1.001);
    }
}

TEST_CASE("respond on the linear scenario reports saturation at eps = 0") {
    const fs::path out = temp_file("report.csv");
    const RunResult res = run_cli(
        "respond --scenario linear_birefringence --eps 0 --steps 20000 --out " +
        out.string());
    REQUIRE(res.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("# modbound csv report v1\n", 0) == 0);
    const auto pos = res.stdout_text.find("ratio=");
    REQUIRE(pos != std::string::npos);
    const double ratio = std::stod(res.stdout_text.substr(pos + 6));
    CHECK(ratio > 1.0 - 1e-3);
    CHECK(ratio < 1.0 + 1e-3);
}

TEST_CASE("respond near the Zener saturation peak") {
    const RunResult res = run_cli(
        "respond --scenario zener --lambda 0.695 --steps 30000 --quad-panels 16 --out " +
        temp_file("report_zener.csv").string());
    REQUIRE(res.exit_code == 0);
    const auto pos = res.stdout_text.find("ratio=");
    REQUIRE(pos != std::string::npos);
    const double ratio = std::stod(res.stdout_text.substr(pos + 6));
    CHECK(ratio >= 0.95);
    CHECK(ratio < 1.0);
}

TEST_CASE("respond with a zero perturbation yields an all-zero report") {
    const fs::path table = temp_file("base.tsv");
    {
        std::ofstream t(table);
        t << "# s k0 kx ky kz\n";
        t << "0.0 0.0 0.4 0.1 0.0\n";
        t << "1.0 0.0 0.4 -0.1 0.2\n";
        t << "2.0 0.0 0.4 0.0 0.1\n";
    }
    const fs::path cfg = temp_file("zero_pert.cfg");
    {
        std::ofstream c(cfg);
        c << "scenario = custom_tabulated\n";
        c << "base_table = " << table.string() << "\n";
        c << "eps = 0.05\n";
        c << "steps = 5000\n";
        c << "quad_panels = 16\n";
    }
    const fs::path out = temp_file("report_zero.csv");
    const RunResult res = run_cli("respond --config " + cfg.string() + " --out " +
                                  out.string());
    REQUIRE(res.exit_code == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    std::getline(in, line);
    // T0,T_eps,dT_deps,eps_used,bound_schwartz,bound_pauli,saturation_ratio
    double v[7];
    char comma;
    std::istringstream ls(line);
    ls >> v[0];
    for (int i = 1; i < 7; ++i) ls >> comma >> v[i];
    CHECK(v[0] == v[1]);                    // T unchanged by eps
    CHECK(std::abs(v[2]) < 1e-12);          // dT_deps
    CHECK(v[4] == 0.0);                     // schwartz
    CHECK(v[5] == 0.0);                     // pauli
    CHECK(v[6] == 0.0);                     // ratio

    // custom without base_table is a config error
    CHECK(run_cli("respond --scenario custom_tabulated --eps 0.05 --out " +
                  temp_file("r2.csv").string())
              .exit_code == 2);
}

TEST_CASE("respond with optimal polarizer flag") {
    const RunResult res = run_cli(
        "respond --scenario linear_birefringence --eps 0.1 --steps 10000 --out " +
        temp_file("rep_opt.csv").string() + " --optimal-polarizer");
    REQUIRE(res.exit_code == 0);
    CHECK(res.stdout_text.find("optimal_polarizer=") != std::string::npos);
    CHECK(res.stdout_text.find("achieved=") != std::string::npos);

    // eps = 0 with the flag is a degenerate request
    const RunResult degenerate = run_cli(
        "respond --scenario linear_birefringence --eps 0 --optimal-polarizer --out " +
        temp_file("rep_degen.csv").string());
    CHECK(degenerate.exit_code == 4);
}

TEST_CASE("config file drives the run and bad configs exit 2") {
    const fs::path cfg = temp_file("run.cfg");
    {
        std::ofstream c(cfg);
        c << "scenario = zener\n";
        c << "lambda = 1.0\n";
        c << "steps = 5000\n";
        c << "out = " << temp_file("cfg_traj.csv").string() << "\n";
    }
    CHECK(run_cli("simulate --config " + cfg.string()).exit_code == 0);

    const fs::path bad = temp_file("bad.cfg");
    {
        std::ofstream c(bad);
        c << "mystery = 1\n";
    }
    CHECK(run_cli("simulate --config " + bad.string()).exit_code == 2);
    CHECK(run_cli("simulate --config /does/not/exist.cfg").exit_code == 2);
    CHECK(run_cli("sweep --scenario linear_birefringence").exit_code == 2);
    CHECK(run_cli("sweep --scenario zener --lambda-grid 5:1:10").exit_code == 2);
}

TEST_CASE("verify passes on the linear scenario and custom profiles") {
    const RunResult res = run_cli(
        "verify --scenario linear_birefringence --eps 0.01 --steps 20000");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("expansion_lhs_rhs") != std::string::npos);
    CHECK(res.stdout_text.find("schwartz_le_pauli") != std::string::npos);
    CHECK(res.stdout_text.find("unitarity_residual") != std::string::npos);
    CHECK(res.stdout_text.find("[FAIL]") == std::string::npos);

    const fs::path base = temp_file("vbase.tsv");
    {
        std::ofstream t(base);
        t << "0.0 0.1 0.4 0.1 -0.3\n";
        t << "0.7 -0.2 0.3 -0.1 0.2\n";
        t << "1.5 0.0 0.5 0.2 0.1\n";
    }
    const fs::path pert = temp_file("vpert.tsv");
    {
        std::ofstream t(pert);
        t << "0.0 0.0 0.2 -0.4 0.1\n";
        t << "0.8 0.0 -0.3 0.2 0.0\n";
        t << "1.5 0.0 0.1 0.3 -0.2\n";
    }
    const fs::path cfg = temp_file("verify.cfg");
    {
        std::ofstream c(cfg);
        c << "scenario = custom_tabulated\n";
        c << "base_table = " << base.string() << "\n";
        c << "pert_table = " << pert.string() << "\n";
        c << "eps = 0.01\n";
        c << "steps = 20000\n";
    }
    const RunResult custom = run_cli("verify --config " + cfg.string());
    CHECK(custom.exit_code == 0);
    CHECK(custom.stdout_text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("verify handles the Zener scenario via the substituted grid") {
    const RunResult res =
        run_cli("verify --scenario zener --lambda 1 --eps 0.01 --steps 50000");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("MODBOUND_WORKERS validation") {
    CHECK(run_cli("sweep --scenario zener --lambda-grid 0:1:3 --steps 2000 --out " +
                      temp_file("wk.csv").string(),
                  "MODBOUND_WORKERS=abc")
              .exit_code == 2);
    CHECK(run_cli("sweep --scenario zener --lambda-grid 0:1:3 --steps 2000 --out " +
                      temp_file("wk2.csv").string(),
                  "MODBOUND_WORKERS=0")
              .exit_code == 2);
}
