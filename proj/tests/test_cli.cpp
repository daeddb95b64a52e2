#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = QUATBOUND_CLI_PATH;

int run_command(const std::string& args, std::string* output = nullptr) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string collected;
    std::array<char, 4096> buffer;
    while (std::size_t count = std::fread(buffer.data(), 1, buffer.size(), pipe))
        collected.append(buffer.data(), count);
    const int status = pclose(pipe);
    if (output) *output = collected;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string(::testing::TempDir()) + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kUnitQuadratic = R"({"coefficients": [[1,0,0,0],[0,0,0,0],[1,0,0,0]]})";

}  // namespace

TEST(Cli, BoundsTable) {
    const std::string path = write_temp("cli_quad.json", kUnitQuadratic);
    std::string out;
    EXPECT_EQ(run_command("bounds " + path, &out), 0);
    EXPECT_NE(out.find("cauchy"), std::string::npos);
    EXPECT_NE(out.find("2.828427124"), std::string::npos);
    EXPECT_NE(out.find("1.316074012"), std::string::npos);
    EXPECT_NE(out.find("inapplicable(degree<3)"), std::string::npos);
    EXPECT_NE(out.find("best"), std::string::npos);
}

TEST(Cli, BoundsJson) {
    const std::string path = write_temp("cli_quad2.json", kUnitQuadratic);
    std::string out;
    EXPECT_EQ(run_command("bounds --json " + path, &out), 0);
    const auto node = nlohmann::json::parse(out);
    EXPECT_DOUBLE_EQ(node["entries"]["cauchy"].get<double>(), 2.0);
    EXPECT_DOUBLE_EQ(node["best"]["value"].get<double>(), 1.0);
    EXPECT_EQ(node["t4_variant"], "matrix");

    EXPECT_EQ(run_command("bounds --json --t4-variant theorem " + path, &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["t4_variant"], "theorem");

    EXPECT_EQ(run_command("bounds --t4-variant bogus " + path), 2);
}

TEST(Cli, ZerosAndCheck) {
    const std::string path = write_temp("cli_quad3.json", kUnitQuadratic);
    std::string out;
    EXPECT_EQ(run_command("zeros " + path, &out), 0);
    EXPECT_NE(out.find("SPHERICAL"), std::string::npos);
    EXPECT_NE(out.find("max_modulus 1"), std::string::npos);

    EXPECT_EQ(run_command("zeros --check " + path, &out), 0);
    EXPECT_NE(out.find("all bounds dominate"), std::string::npos);

    const std::string linear = write_temp("cli_linear.json", R"({"coefficients": [[-3,0,0,-4],[1,0,0,0]]})");
    EXPECT_EQ(run_command("zeros --json " + linear, &out), 0);
    const auto node = nlohmann::json::parse(out);
    ASSERT_EQ(node["classes"].size(), 1u);
    EXPECT_EQ(node["classes"][0]["kind"], "ISOLATED");
    EXPECT_DOUBLE_EQ(node["max_modulus"].get<double>(), 5.0);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run_command("bounds /nonexistent/poly.json"), 2);
    const std::string malformed = write_temp("cli_bad.json", "{oops");
    EXPECT_EQ(run_command("bounds " + malformed), 2);
    const std::string empty = write_temp("cli_empty.json", R"({"coefficients": []})");
    EXPECT_EQ(run_command("bounds " + empty), 2);
    const std::string zero = write_temp("cli_zero.json", R"({"coefficients": [[0,0,0,0]]})");
    EXPECT_EQ(run_command("zeros " + zero), 2);
    const std::string short_entry = write_temp("cli_short.json", R"({"coefficients": [[1,0,0]]})");
    EXPECT_EQ(run_command("bounds " + short_entry), 2);
    EXPECT_EQ(run_command(""), 2);
    EXPECT_EQ(run_command("bounds"), 2);
}

TEST(Cli, VerifySweep) {
    std::string out;
    EXPECT_EQ(run_command("verify --degrees 3,4 --trials 5 --seed 7 --max-coeff 2", &out), 0);
    const auto node = nlohmann::json::parse(out);
    EXPECT_EQ(node["trials"].get<int>(), 10);
    EXPECT_EQ(node["passed"].get<int>(), 10);
    EXPECT_EQ(node["failed"].get<int>(), 0);
    EXPECT_TRUE(node["violations"].empty());
    EXPECT_FALSE(node["tightest"].get<std::string>().empty());
}

TEST(Cli, VerifyZeroSlackPassesOnFixedSeed) {
    // Generic random polynomials leave fat margins between zeros and
    // bounds, so even zero slack holds; deterministic seeding keeps this
    // stable.
    std::string out;
    EXPECT_EQ(run_command("verify --degrees 3,4 --trials 20 --seed 3 --max-coeff 2 --slack 0", &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["failed"].get<int>(), 0);
}

TEST(Cli, BoundsJsonCubic) {
    const std::string path =
        write_temp("cli_cubic.json", R"({"coefficients": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]]})");
    std::string out;
    EXPECT_EQ(run_command("bounds --json " + path, &out), 0);
    const auto node = nlohmann::json::parse(out);
    EXPECT_NEAR(node["entries"]["t2"].get<double>(), 1.2599210498948732, 1e-12);
    EXPECT_NEAR(node["entries"]["t4_matrix"].get<double>(), 1.2599210498948732, 1e-12);
    EXPECT_NEAR(node["entries"]["spec3"].get<double>(), 1.0, 1e-10);
}

TEST(Cli, VerifyConfigErrors) {
    EXPECT_EQ(run_command("verify --degrees 3 --trials 0 --seed 1 --max-coeff 2"), 2);
    EXPECT_EQ(run_command("verify --degrees 1 --trials 5 --seed 1 --max-coeff 2"), 2);
    EXPECT_EQ(run_command("verify --degrees 3 --trials 5 --seed 1 --max-coeff 0"), 2);
    EXPECT_EQ(run_command("verify --trials 5 --seed 1 --max-coeff 2"), 2);
}

TEST(Cli, VerifyDeterministicOutput) {
    std::string first, second;
    const std::string args = "verify --degrees 3,4 --trials 8 --seed 11 --max-coeff 3";
    EXPECT_EQ(run_command(args, &first), 0);
    EXPECT_EQ(run_command(args, &second), 0);
    EXPECT_EQ(first, second);
}

TEST(Cli, ResidualEnvOverride) {
    const std::string path = write_temp("cli_quad4.json", kUnitQuadratic);
    FILE* pipe = popen(("QUATBOUND_TOL=1e-6 " + kCli + " zeros " + path + " >/dev/null 2>&1").c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);

    pipe = popen(("QUATBOUND_TOL=abc " + kCli + " zeros " + path + " >/dev/null 2>&1").c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 2);
}
