#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geophase/cli.hpp"
#include "geophase/errors.hpp"

using namespace geophase;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "geophase_cli_test";
    fs::create_directories(dir);
    return dir;
}

int exit_code(const std::string& args) {
    const std::string cmd = std::string(GEOPHASE_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST(ParseRunSpec, FullSpec) {
    const cli::RunSpec spec = cli::parse_run_spec(std::string(R"({
        "spec_version": 1,
        "command": "evolve",
        "model": {"type": "pt_dimer", "a": 0.1, "g": 1.0, "s": 0.4},
        "initial_state": {"theta0": 0.5, "phi0": 1.0},
        "integrator": {"step": 0.001, "duration": 2.0, "stride": 10},
        "representation": "real4",
        "output": {"path": "x.json", "format": "json"}
    })"));
    EXPECT_EQ(spec.command, cli::Command::Evolve);
    EXPECT_EQ(spec.model.type, cli::ModelType::PTDimer);
    EXPECT_EQ(spec.model.dimer.s, 0.4);
    EXPECT_EQ(spec.bloch.phi0, 1.0);
    EXPECT_EQ(spec.integrator.record_stride, 10);
    EXPECT_EQ(spec.representation, Representation::Real4);
    EXPECT_EQ(spec.output_format, io::Format::JSON);
}

TEST(ParseRunSpec, Diagnostics) {
    auto message = [](const std::string& text) {
        try {
            cli::parse_run_spec(text);
        } catch (const SpecParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"command": "evolve",
        "integrator": {"step": "fast"}})").find("integrator.step"), std::string::npos);
    EXPECT_NE(message("{\"command\": \"evolve\",\n \"model\": }").find("line 2"), std::string::npos);
    EXPECT_NE(message(R"({"command": "evolve", "colour": 1})").find("colour"), std::string::npos);
    EXPECT_NE(message(R"({"command": "fly"})").find("fly"), std::string::npos);
    EXPECT_NE(message(R"({"model": {"type": "hermitian"}})").find("command"), std::string::npos);
    EXPECT_NE(message(R"({"command": "evolve", "model": {"type": "pt_dimer", "h": 1}})").find("model.h"),
              std::string::npos);
}

TEST(SetModelParam, Assignments) {
    cli::ModelSpec m;
    m.type = cli::ModelType::Circuit;
    cli::set_model_param(m, "R=12.5");
    ASSERT_TRUE(m.circuit.resistance.has_value());
    EXPECT_EQ(*m.circuit.resistance, 12.5);
    EXPECT_THROW(cli::set_model_param(m, "R"), SpecParseError);
    EXPECT_THROW(cli::set_model_param(m, "R=abc"), SpecParseError);
    EXPECT_THROW(cli::set_model_param(m, "s=1"), SpecParseError);
}

TEST(CliHarness, ExitCodes) {
    const fs::path dir = scratch();
    EXPECT_EQ(exit_code("check"), 0);
    EXPECT_EQ(exit_code("evolve --duration 1 -o " + (dir / "ok.csv").string()), 0);
    EXPECT_EQ(exit_code("teleport"), 2);
    EXPECT_EQ(exit_code("evolve --model hermitian -p q=1"), 2);
    write(dir / "bad.json", "{\"command\": \"evolve\",");
    EXPECT_EQ(exit_code("evolve --spec " + (dir / "bad.json").string()), 2);
    write(dir / "other.json", R"({"command": "sweep"})");
    EXPECT_EQ(exit_code("evolve --spec " + (dir / "other.json").string()), 2);
    EXPECT_EQ(exit_code("phases --model pt_dimer -p s=1"), 3);          // exceptional point
    EXPECT_EQ(exit_code("evolve --model hermitian -p g=100 --step 0.01"), 3);  // step guard
    EXPECT_EQ(exit_code("circuit -p L=1 -p Gg=0.4 --duration 20"), 3);  // omega0 / a = 2.5: no scale separation
    EXPECT_EQ(exit_code("evolve -o /nonexistent/dir/x.csv"), 4);
    EXPECT_EQ(exit_code("evolve --spec /nonexistent/spec.json"), 4);
}

TEST(CliHarness, DeterministicBytes) {
    const fs::path dir = scratch();
    for (const std::string fmt : {"csv", "json"}) {
        const std::string a = (dir / ("a." + fmt)).string();
        const std::string b = (dir / ("b." + fmt)).string();
        const std::string args = "evolve --model pt_dimer -p s=0.3 --theta0 0.7 --duration 3 --stride 7 --format " + fmt;
        ASSERT_EQ(exit_code(args + " -o " + a), 0);
        ASSERT_EQ(exit_code(args + " -o " + b), 0);
        EXPECT_EQ(slurp(a), slurp(b));
    }
}

TEST(CliHarness, PhasesGeometricMinusPi) {
    const fs::path out = scratch() / "phases.json";
    ASSERT_EQ(exit_code("phases --theta0 1.5707963267948966 -o " + out.string()), 0);
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_NEAR(j.at("geometric").get<double>(), -std::numbers::pi, 1e-12);
    EXPECT_EQ(j.at("spec_version"), 1);
}

TEST(CliHarness, SweepCsv) {
    const fs::path out = scratch() / "sweep.csv";
    ASSERT_EQ(exit_code("sweep --gamma-max 2 --steps 81 -o " + out.string()), 0);
    const std::string text = slurp(out);
    EXPECT_EQ(text.substr(0, text.find('\n')), "gamma,re1,re2,re3,re4,im1,im2,im3,im4,classification");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 82);
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(CliHarness, SpecFileWithOverrides) {
    const fs::path dir = scratch();
    write(dir / "spec.json", R"({"spec_version": 1, "command": "evolve",
        "model": {"type": "hermitian", "h": 0.0, "f": 0.0, "g": 1.0},
        "integrator": {"step": 0.001, "duration": 1.0, "stride": 100},
        "output": {"format": "csv"}})");
    const fs::path out = dir / "spec_out.csv";
    ASSERT_EQ(exit_code("evolve --spec " + (dir / "spec.json").string() + " --stride 500 -o " + out.string()), 0);
    const std::string text = slurp(out);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);  // header + t = 0, 0.5, 1
}

TEST(CliHarness, CircuitJson) {
    const fs::path out = scratch() / "circuit.json";
    ASSERT_EQ(exit_code("circuit --duration 20 --step 0.001 --format json -o " + out.string()), 0);
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_NEAR(j.at("precession").at("rate").get<double>(), 0.2, 0.002);
    EXPECT_EQ(j.at("trajectory").at("metadata").at("representation_tag"), "second_order2");
}
