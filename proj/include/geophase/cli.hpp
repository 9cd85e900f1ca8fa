#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "geophase/circuits.hpp"
#include "geophase/evolution.hpp"
#include "geophase/hamiltonian_models.hpp"
#include "geophase/io.hpp"
#include "geophase/phases.hpp"

namespace geophase::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kSpecError = 2,
    kDomainError = 3,
    kIOError = 4,
};

enum class Command { Evolve, Phases, Sweep, Circuit, Check };

enum class ModelType { Hermitian, PTDimer, Circuit };

struct ModelSpec {
    ModelType type = ModelType::Hermitian;
    HermitianEqualDiagonal hermitian{0.0, 0.0, 1.0};
    PTDimerParams dimer{};
    CircuitParams circuit{};
};

struct RunSpec {
    Command command = Command::Check;
    ModelSpec model{};
    bool model_given = false;

    BlochInitialState bloch{};
    std::optional<ComplexVector2> psi;
    std::array<double, 2> voltage{1.0, 0.0};
    std::array<double, 2> voltage_rate{0.0, 0.0};

    /// step <= 0 selects default_step for the model.
    IntegratorConfig integrator{0.0, 10.0, 1};
    Representation representation = Representation::Complex2;

    double gamma_max = 2.0;
    int sweep_steps = 81;
    double omega_loop = 0.1;

    std::string output_path;
    io::Format output_format = io::Format::CSV;
};

Command command_from_string(const std::string& name);
const char* to_string(Command c);

/// Parses a JSON run specification. Throws SpecParseError naming the offending field,
/// or the line and column for malformed JSON text.
RunSpec parse_run_spec(const std::string& text);
RunSpec parse_run_spec(const nlohmann::json& j);
RunSpec load_run_spec(const std::string& path);

/// Applies `key=value` to the model block (h, f, g | a, g, s | L, C, Gg, R).
void set_model_param(ModelSpec& model, const std::string& assignment);

/// Executes the command and writes its artifact. Exceptions propagate to main().
int run(const RunSpec& spec, std::ostream& log);
int run_with_format(const RunSpec& spec, io::Format fmt, std::ostream& log);

/// Command-line entry point. Maps failures to ExitCode.
int main(int argc, char** argv);

}  // namespace geophase::cli
