#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "sardquad/serialization.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SARDQUAD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string data_file(const std::string& name) {
    return std::string(SARDQUAD_DATA_DIR) + "/golden/" + name;
}

}  // namespace

TEST_CASE("weights: trapezoid output and determinism") {
    const auto a = run_cli("weights --m 1 --N 4");
    CHECK(a.exit_code == 0);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["h"] == "1/4");
    CHECK(j["weights"][0] == "1.250000000000000000000000000000000000000e-01");
    CHECK(j["weights"][2] == "2.500000000000000000000000000000000000000e-01");

    const auto b = run_cli("weights --m 1 --N 4");
    CHECK(a.output == b.output);

    const auto csv = run_cli("weights --m 1 --N 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("beta,weight\n", 0) == 0);
}

TEST_CASE("weights: argument validation maps to exit 2") {
    CHECK(run_cli("weights --m 0 --N 4").exit_code == 2);
    CHECK(run_cli("weights --m 3 --N 2").exit_code == 2);
    CHECK(run_cli("weights --m 2 --N 5 --precision 32").exit_code == 2);
    CHECK(run_cli("weights --m 2 --N 5 --precision 8192").exit_code == 2);
    CHECK(run_cli("weights --m 2 --N 5 --format yaml").exit_code == 2);
    CHECK(run_cli("weights --N 4").exit_code == 2);  // missing required --m
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("weights: --out writes the same bytes as stdout") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "sardquad_cli_weights.json").string();
    const auto to_file = run_cli("weights --m 2 --N 5 --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    const auto direct = run_cli("weights --m 2 --N 5");
    CHECK(sardquad::read_file(path) == direct.output);
    fs::remove(path);
}

TEST_CASE("validate: clean run exits 0 with residuals under tolerance") {
    const auto r = run_cli("validate --m 1 --N 8");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == true);
}

TEST_CASE("validate: matches a committed golden file and rejects a tampered one") {
    namespace fs = std::filesystem;
    const auto ok = run_cli("validate --m 2 --N 5 --golden " + data_file("m2_N5.json"));
    CHECK(ok.exit_code == 0);

    // tamper with one numerator
    const std::string original = sardquad::read_file(data_file("m2_N5.json"));
    std::string broken = original;
    const auto pos = broken.find("\"weights\": [");
    REQUIRE(pos != std::string::npos);
    const auto digit = broken.find_first_of("0123456789", pos);
    REQUIRE(digit != std::string::npos);
    broken[digit] = broken[digit] == '9' ? '8' : '9';
    const std::string tampered = (fs::temp_directory_path() / "sardquad_tampered.json").string();
    std::ofstream(tampered) << broken;
    const auto bad = run_cli("validate --m 2 --N 5 --golden " + tampered);
    CHECK(bad.exit_code == 1);
    const auto j = nlohmann::json::parse(bad.output);
    CHECK(j["pass"] == false);
    fs::remove(tampered);
}

TEST_CASE("weights output matches the committed golden oracle file") {
    const auto r = run_cli("weights --m 2 --N 5");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const auto golden = sardquad::read_golden_file(data_file("m2_N5.json"));
    for (size_t beta = 0; beta < 6; ++beta) {
        const double closed = std::stod(j["weights"][beta].get<std::string>());
        const double exact = sardquad::Rational(golden.weights[beta]).get_d();
        CHECK(std::fabs(closed - exact) * 5.0 < 1e-10);  // |C - C_oracle| / h
    }
}

TEST_CASE("validate: a near-tolerance run doubles the working precision once") {
    const auto r = run_cli("validate --m 2 --N 5 --precision 64");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["precision"] == 64);
    CHECK(j["precision_used"] == 128);
    CHECK(j["pass"] == true);
}

TEST_CASE("validate: golden file for a different grid is an argument error") {
    CHECK(run_cli("validate --m 2 --N 6 --golden " + data_file("m2_N5.json")).exit_code == 2);
}

TEST_CASE("validate: --write-golden emits a loadable exact solution") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "sardquad_cli_golden.json").string();
    const auto r = run_cli("validate --m 1 --N 2 --write-golden " + path);
    CHECK(r.exit_code == 0);
    const auto golden = sardquad::read_golden_file(path);
    CHECK(golden.weights[1] == sardquad::rational(1, 2));
    CHECK(sardquad::read_file(path) == sardquad::read_file(data_file("m1_N2.json")));
    fs::remove(path);
}

TEST_CASE("converge: CSV shape and the classical trapezoid order") {
    const auto r = run_cli("converge --m 1 --f exp --Ns 4,8,16,32");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("N,error,observed_order\n", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 5);
    const auto last_comma = r.output.rfind(',');
    const double last_order = std::stod(r.output.substr(last_comma + 1));
    CHECK(last_order == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("converge: exactness rows and the unknown-integrand error") {
    const auto ok = run_cli("converge --m 2 --f poly1 --Ns 4,8");
    CHECK(ok.exit_code == 0);
    CHECK(run_cli("converge --m 2 --f unknown --Ns 4,8").exit_code == 2);
}

TEST_CASE("ef: coefficient listings and the degree cap") {
    CHECK(run_cli("ef --k 1").output == "1 1\n");
    CHECK(run_cli("ef --k 2").output.rfind("1 4 1\n", 0) == 0);
    CHECK(run_cli("ef --k 3").output == "1 11 11 1\n");
    const auto roots = run_cli("ef --k 2");
    CHECK(roots.output.find("-2.67949192431122706") != std::string::npos);
    CHECK(run_cli("ef --k 41").exit_code == 2);
    CHECK(run_cli("ef --k 40").exit_code == 0);
}

TEST_CASE("operator: JSON diagnostics with residuals under tolerance") {
    const auto r = run_cli("operator --m 2 --N 10");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["m"] == 2);
    CHECK(j["N"] == 10);
    CHECK(j["stencil"].size() == 21);
    CHECK(j["moment_residuals"].size() == 9);
    for (const auto& s : j["moment_residuals"]) {
        const double v = std::stod(s.get<std::string>());
        CHECK(v < 1e-30);
    }
}

TEST_CASE("environment variable sets the default precision") {
    const auto r = run_cli("validate --m 1 --N 4");
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["precision"] == 256);

    const std::string cmd = std::string("QUAD_PRECISION_BITS=128 ") + SARDQUAD_CLI_PATH +
                            " validate --m 1 --N 4 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    pclose(pipe);
    const auto j2 = nlohmann::json::parse(output);
    CHECK(j2["precision"] == 128);
}
