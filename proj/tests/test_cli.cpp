// Contract tests for the command-line interface.  The binary path arrives as
// argv[1] from ctest.

#define CATCH_AMALGAMATED_CUSTOM_MAIN
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <complex>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/tmp/lcft_stderr.txt";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_contract <path-to-lcft>\n");
        return 2;
    }
    g_cli = argv[1];
    Catch::Session session;
    return session.run(argc - 1, argv + 1);
}

TEST_CASE("eval rfzz at beta = Q returns -1") {
    const double Q = 1.3 / 2.0 + 2.0 / 1.3;
    char cmd[256];
    std::snprintf(cmd, sizeof cmd,
                  "eval rfzz --gamma 1.3 --beta %.10f --sigma 1.0083,1.0083 --format json",
                  Q);
    auto r = run(cmd);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(std::abs(j["value"]["re"].get<double>() + 1.0) < 1e-9);
    REQUIRE(std::abs(j["value"]["im"].get<double>()) < 1e-9);
}

TEST_CASE("eval dgamma at Q/2 returns 1") {
    auto r = run("eval dgamma --gamma 1.0 --x 1.25 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(std::abs(j["value"]["re"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("eval at a pole collision exits 2 with a machine-readable error") {
    auto r = run(
        "eval hpt --gamma 1.2 --beta 1.333333333333333,1.6,1.6 "
        "--sigma 1.1333,1.2,1.05 --format json");
    REQUIRE(r.exit_code == 2);
    const auto err = nlohmann::json::parse(slurp("/tmp/lcft_stderr.txt"));
    REQUIRE(err["error"] == "PoleCollision");
    REQUIRE(err.contains("witness"));
}

TEST_CASE("usage errors exit with 64") {
    REQUIRE(run("eval hpt --gamma 1.2").exit_code == 64);
    REQUIRE(run("bogus-subcommand").exit_code == 64);
    REQUIRE(run("scan rfzz --gamma 1.2 --vary nope --start 0 --stop 1 --count 5 "
                "--sigma 1.1,1.0 --beta 1.5").exit_code == 64);
}

TEST_CASE("verify runs are byte-identical for a fixed seed and exit 0") {
    auto r1 = run("verify --gamma-list 1.2 --cases 1 --seed 42 --jobs 2 --report /tmp/lcft_rep1.json");
    auto r2 = run("verify --gamma-list 1.2 --cases 1 --seed 42 --jobs 4 --report /tmp/lcft_rep2.json");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    const std::string a = slurp("/tmp/lcft_rep1.json");
    const std::string b = slurp("/tmp/lcft_rep2.json");
    REQUIRE(!a.empty());
    REQUIRE(a == b);

    // all reports pass and the JSON round-trips byte-identically
    const auto j = nlohmann::json::parse(a);
    REQUIRE(j.is_array());
    REQUIRE(j.size() >= 10);
    for (const auto& rec : j) REQUIRE(rec["pass"].get<bool>());
    REQUIRE(j.dump(2) + "\n" == a);
}

TEST_CASE("verify with an unattainable tolerance fails with listed reports") {
    auto r = run("verify --gamma-list 1.2 --cases 1 --seed 42 --jobs 2 --tol 1e-15 --report /tmp/lcft_rep3.json");
    REQUIRE(r.exit_code == 1);
    const auto j = nlohmann::json::parse(slurp("/tmp/lcft_rep3.json"));
    bool any_fail = false;
    for (const auto& rec : j) any_fail = any_fail || !rec["pass"].get<bool>();
    REQUIRE(any_fail);
}

TEST_CASE("scan emits the requested number of rows and marks poles") {
    auto r = run("scan rfzz --gamma 1.3 --vary beta --start 1.2 --stop 2.2 --count 50 "
                 "--sigma 1.1,1.02 --jobs 2 --out /tmp/lcft_scan1.csv");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp("/tmp/lcft_scan1.csv");
    REQUIRE(csv.rfind("param,value_re,value_im,err_est,status\n", 0) == 0);
    int rows = 0;
    for (char c : csv) rows += (c == '\n');
    REQUIRE(rows == 51);  // header + 50 data rows

    // crossing the double-Gamma pole lattice marks exactly the lattice rows
    auto r2 = run("scan dgamma --gamma 1.0 --vary x --start -1 --stop 1 --count 9 "
                  "--jobs 2 --out /tmp/lcft_scan2.csv");
    REQUIRE(r2.exit_code == 0);
    std::istringstream lines(slurp("/tmp/lcft_scan2.csv"));
    std::string line;
    std::getline(lines, line);  // header
    int pole_rows = 0, ok_rows = 0;
    while (std::getline(lines, line)) {
        if (line.find(",pole") != std::string::npos) ++pole_rows;
        if (line.find(",ok") != std::string::npos) ++ok_rows;
    }
    REQUIRE(pole_rows == 3);  // x = -1, -0.5, 0 for gamma = 1
    REQUIRE(ok_rows == 6);

    // CSV determinism: the same scan reproduces the same bytes
    auto r3 = run("scan dgamma --gamma 1.0 --vary x --start -1 --stop 1 --count 9 "
                  "--jobs 4 --out /tmp/lcft_scan3.csv");
    REQUIRE(r3.exit_code == 0);
    REQUIRE(slurp("/tmp/lcft_scan2.csv") == slurp("/tmp/lcft_scan3.csv"));
}

TEST_CASE("scanned reflection product is 1 row-wise") {
    const double g = 1.3, Q = g / 2.0 + 2.0 / g;
    char cmd[512];
    std::snprintf(cmd, sizeof cmd,
                  "scan rfzz --gamma %.2f --vary beta --start 1.30 --stop 1.90 --count 7 "
                  "--sigma 1.12,1.01 --jobs 2 --out /tmp/lcft_scanA.csv", g);
    REQUIRE(run(cmd).exit_code == 0);
    std::snprintf(cmd, sizeof cmd,
                  "scan rfzz --gamma %.2f --vary beta --start %.10f --stop %.10f --count 7 "
                  "--sigma 1.12,1.01 --jobs 2 --out /tmp/lcft_scanB.csv",
                  g, 2.0 * Q - 1.30, 2.0 * Q - 1.90);
    REQUIRE(run(cmd).exit_code == 0);

    auto parse_vals = [](const std::string& path) {
        std::vector<std::complex<double>> vals;
        std::istringstream lines(slurp(path));
        std::string line;
        std::getline(lines, line);
        while (std::getline(lines, line)) {
            double p, re, im, err;
            char status[16];
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%15s", &p, &re, &im, &err,
                            status) == 5)
                vals.emplace_back(re, im);
        }
        return vals;
    };
    const auto va = parse_vals("/tmp/lcft_scanA.csv");
    const auto vb = parse_vals("/tmp/lcft_scanB.csv");
    REQUIRE(va.size() == 7);
    REQUIRE(vb.size() == 7);
    for (std::size_t i = 0; i < va.size(); ++i)
        REQUIRE(std::abs(va[i] * vb[i] - 1.0) < 1e-9);
}
