#include "geophase/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "geophase/errors.hpp"
#include "geophase/selfcheck.hpp"

namespace geophase::cli {

namespace {

using nlohmann::json;

// Per-command default when no output format is given.
io::Format default_format(Command c) {
    return (c == Command::Phases || c == Command::Circuit) ? io::Format::JSON : io::Format::CSV;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw SpecParseError("field " + where + "." + item.key() + ": unknown field");
        }
    }
}

const json& object_at(const json& parent, const std::string& key, const std::string& where) {
    const json& v = parent.at(key);
    if (!v.is_object()) throw SpecParseError("field " + where + ": expected an object");
    return v;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw SpecParseError("field " + where + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw SpecParseError("field " + where + ": must be finite");
    return x;
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw SpecParseError("field " + where + ": expected an integer");
    return v.get<int>();
}

std::string string(const json& v, const std::string& where) {
    if (!v.is_string()) throw SpecParseError("field " + where + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> numbers(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_array() || v.size() != n) {
        throw SpecParseError("field " + where + ": expected an array of " + std::to_string(n) + " numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ModelType model_type_from_string(const std::string& name) {
    if (name == "hermitian") return ModelType::Hermitian;
    if (name == "pt_dimer") return ModelType::PTDimer;
    if (name == "circuit") return ModelType::Circuit;
    throw SpecParseError("unknown model type '" + name + "' (expected hermitian, pt_dimer or circuit)");
}

const char* to_string(ModelType t) {
    switch (t) {
        case ModelType::Hermitian: return "hermitian";
        case ModelType::PTDimer: return "pt_dimer";
        case ModelType::Circuit: return "circuit";
    }
    return "hermitian";
}

void set_model_value(ModelSpec& model, const std::string& key, double value) {
    const auto bad = [&] {
        throw SpecParseError("field model." + key + ": not a parameter of model '" +
                             std::string(to_string(model.type)) + "'");
    };
    switch (model.type) {
        case ModelType::Hermitian:
            if (key == "h") model.hermitian.h = value;
            else if (key == "f") model.hermitian.f = value;
            else if (key == "g") model.hermitian.g = value;
            else bad();
            break;
        case ModelType::PTDimer:
            if (key == "a") model.dimer.a = value;
            else if (key == "g") model.dimer.g = value;
            else if (key == "s") model.dimer.s = value;
            else bad();
            break;
        case ModelType::Circuit:
            if (key == "L") model.circuit.inductance = value;
            else if (key == "C") model.circuit.capacitance = value;
            else if (key == "Gg") model.circuit.gyrator_conductance = value;
            else if (key == "R") model.circuit.resistance = value;
            else bad();
            break;
    }
}

ModelSpec default_model(Command c) {
    ModelSpec m;
    if (c == Command::Sweep || c == Command::Circuit) {
        m.type = ModelType::Circuit;
        m.circuit = {1.0 / 400.0, 1.0, 0.4, std::nullopt};  // omega0 = 20, a = 0.4
    }
    return m;
}

json model_json(const ModelSpec& m) {
    switch (m.type) {
        case ModelType::Hermitian:
            return {{"type", "hermitian"}, {"h", m.hermitian.h}, {"f", m.hermitian.f}, {"g", m.hermitian.g}};
        case ModelType::PTDimer:
            return {{"type", "pt_dimer"}, {"a", m.dimer.a}, {"g", m.dimer.g}, {"s", m.dimer.s}};
        case ModelType::Circuit: {
            json j = {{"type", "circuit"},
                      {"L", m.circuit.inductance},
                      {"C", m.circuit.capacitance},
                      {"Gg", m.circuit.gyrator_conductance}};
            j["R"] = m.circuit.resistance ? json(*m.circuit.resistance) : json(nullptr);
            return j;
        }
    }
    return {};
}

std::map<std::string, double> model_parameters(const ModelSpec& m) {
    switch (m.type) {
        case ModelType::Hermitian:
            return {{"h", m.hermitian.h}, {"f", m.hermitian.f}, {"g", m.hermitian.g}};
        case ModelType::PTDimer:
            return {{"a", m.dimer.a}, {"g", m.dimer.g}, {"s", m.dimer.s}};
        case ModelType::Circuit: {
            const CircuitRates r = circuit_rates(m.circuit);
            std::map<std::string, double> p{{"L", m.circuit.inductance},
                                            {"C", m.circuit.capacitance},
                                            {"Gg", m.circuit.gyrator_conductance},
                                            {"omega0", r.omega0},
                                            {"coupling", r.coupling},
                                            {"loss", r.loss}};
            if (m.circuit.resistance) p["R"] = *m.circuit.resistance;
            return p;
        }
    }
    return {};
}

EffectiveHamiltonian quantum_model(const ModelSpec& m) {
    switch (m.type) {
        case ModelType::Hermitian: return build_hermitian(m.hermitian);
        case ModelType::PTDimer: return build_pt_dimer(m.dimer);
        case ModelType::Circuit: break;
    }
    throw SpecParseError("field model.type: command needs a hermitian or pt_dimer model");
}

SecondOrderSystem circuit_model(const ModelSpec& m) {
    if (m.type != ModelType::Circuit) {
        throw SpecParseError("field model.type: command needs a circuit model");
    }
    return m.circuit.resistance ? pt_circuit_system(m.circuit) : foucault_system(m.circuit);
}

IntegratorConfig resolve_step(IntegratorConfig cfg, double spectral_radius) {
    if (cfg.step <= 0.0) cfg.step = default_step(spectral_radius);
    return cfg;
}

double companion_radius(const SecondOrderSystem& sys) {
    double r = 0.0;
    for (const auto& m : second_order_spectrum(sys)) r = std::max(r, std::abs(m));
    return r;
}

io::Format output_format(const RunSpec& spec, bool explicit_format) {
    return explicit_format ? spec.output_format : default_format(spec.command);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Line and column of a byte offset, both 1-based.
std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Trajectory run_evolution(const RunSpec& spec) {
    Trajectory t;
    if (spec.model.type == ModelType::Circuit) {
        const SecondOrderSystem sys = circuit_model(spec.model);
        const IntegratorConfig cfg = resolve_step(spec.integrator, companion_radius(sys));
        t = integrate_second_order(sys, {spec.voltage[0], spec.voltage[1]},
                                   {spec.voltage_rate[0], spec.voltage_rate[1]}, cfg);
        t.parameters = model_parameters(spec.model);
        return t;
    }

    const ComplexMatrix2 h = quantum_model(spec.model).matrix();
    ComplexVector2 psi0;
    if (spec.psi) {
        psi0 = *spec.psi;
    } else {
        spec.bloch.validate();
        const EigenSystem2 es = eig2(h);
        psi0 = spec.bloch.compose(es.eigenvector1, es.eigenvector2);
    }
    const IntegratorConfig cfg = resolve_step(spec.integrator, std::max(h.spectral_radius(), 1e-12));

    switch (spec.representation) {
        case Representation::Complex2: t = integrate_schrodinger(h, psi0, cfg); break;
        case Representation::Real4: t = integrate_real4(real4(h), to_real4(psi0), cfg); break;
        case Representation::SecondOrder2: {
            const RealSplit rs = split(h);
            const Eigen::Vector2d x0{psi0.c1.real(), psi0.c2.real()};
            const Eigen::Vector2d y0{psi0.c1.imag(), psi0.c2.imag()};
            t = integrate_second_order(second_order(rs, SecondOrderVariable::X), x0,
                                       initial_derivative(rs, SecondOrderVariable::X, x0, y0), cfg);
            break;
        }
    }
    t.parameters = model_parameters(spec.model);
    if (!spec.psi) {
        t.parameters["theta0"] = spec.bloch.theta0;
        t.parameters["phi0"] = spec.bloch.phi0;
    }
    return t;
}

json phases_json(const RunSpec& spec) {
    json out = {{"spec_version", io::kSpecVersion}, {"command", "phases"}, {"model", model_json(spec.model)}};
    if (spec.model.type == ModelType::Circuit) {
        const CircuitRates r = circuit_rates(spec.model.circuit);
        const double gamma = r.gamma();
        out["gamma"] = gamma;
        out["omega_loop"] = spec.omega_loop;
        out["period"] = pt_modified_period(r.coupling, gamma, spec.omega_loop);
        out["geometric"] = pt_geometric_phase(r.coupling, gamma, spec.omega_loop);
        out["method"] = to_string(PhaseMethod::Analytic);
        return out;
    }

    spec.bloch.validate();
    const EffectiveHamiltonian h = quantum_model(spec.model);
    PhaseReport report;
    const EigenSystem2 es = eig2(h.matrix());
    if (spec.model.type == ModelType::PTDimer) {
        report = pt_dimer_phases(h, spec.bloch);
    } else {
        report = analytic_phases(es.eigenvalue1.real(), es.eigenvalue2.real(), spec.bloch);
    }
    out["initial_state"] = {{"theta0", spec.bloch.theta0}, {"phi0", spec.bloch.phi0}};
    out["eigenvalues"] = {es.eigenvalue1.real(), es.eigenvalue2.real()};
    out["period"] = report.period;
    out["total"] = report.total;
    out["dynamic"] = report.dynamic;
    out["geometric"] = report.geometric;
    out["hannay"] = report.hannay;
    out["method"] = to_string(report.method);
    return out;
}

std::string phases_csv(const json& j) {
    std::string text = "period,total,dynamic,geometric,hannay\n";
    const auto get = [&](const char* k) {
        return j.contains(k) ? io::format_double(j.at(k).get<double>()) : std::string{};
    };
    text += get("period") + "," + get("total") + "," + get("dynamic") + "," + get("geometric") + "," +
            get("hannay") + "\n";
    return text;
}

std::vector<double> sweep_grid(const RunSpec& spec) {
    if (spec.sweep_steps < 2) throw SpecParseError("field sweep.steps: need at least 2 points");
    if (!(spec.gamma_max > 0.0)) throw SpecParseError("field sweep.gamma_max: must be positive");
    std::vector<double> grid;
    for (int i = 0; i < spec.sweep_steps; ++i) {
        grid.push_back(spec.gamma_max * i / static_cast<double>(spec.sweep_steps - 1));
    }
    return grid;
}

void run_circuit(const RunSpec& spec, io::Format fmt) {
    const Trajectory t = run_evolution(spec);
    if (fmt == io::Format::CSV) {
        io::export_trajectory(t, fmt, spec.output_path);
        return;
    }
    const CircuitRates r = circuit_rates(spec.model.circuit);
    const double gamma = r.gamma();
    json precession = nullptr;
    if (gamma < 1.0) {
        const PrecessionEstimate est = extract_precession(t);
        const double effective = r.coupling * std::sqrt(1.0 - gamma * gamma);
        precession = {{"rate", est.rate},
                      {"carrier", est.carrier},
                      {"predicted_rate", 0.5 * effective},
                      {"angle_final", est.angle_at(t.times.back())},
                      {"modified_period", pt_modified_period(r.coupling, gamma, spec.omega_loop)}};
    }
    const json out = {{"spec_version", io::kSpecVersion},
                      {"command", "circuit"},
                      {"model", model_json(spec.model)},
                      {"gamma", gamma},
                      {"precession", precession},
                      {"trajectory", io::trajectory_to_json(t)}};
    io::write_text(spec.output_path, dump(out));
}

}  // namespace

Command command_from_string(const std::string& name) {
    if (name == "evolve") return Command::Evolve;
    if (name == "phases") return Command::Phases;
    if (name == "sweep") return Command::Sweep;
    if (name == "circuit") return Command::Circuit;
    if (name == "check") return Command::Check;
    throw SpecParseError("unknown command '" + name + "'");
}

const char* to_string(Command c) {
    switch (c) {
        case Command::Evolve: return "evolve";
        case Command::Phases: return "phases";
        case Command::Sweep: return "sweep";
        case Command::Circuit: return "circuit";
        case Command::Check: return "check";
    }
    return "check";
}

void set_model_param(ModelSpec& model, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw SpecParseError("parameter '" + assignment + "': expected key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
        throw SpecParseError("parameter '" + key + "': '" + text + "' is not a finite number");
    }
    set_model_value(model, key, value);
}

RunSpec parse_run_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError("malformed JSON at " + locate(text, e.byte) + ": " + e.what());
    }
    return parse_run_spec(j);
}

RunSpec parse_run_spec(const json& j) {
    if (!j.is_object()) throw SpecParseError("run spec: expected a JSON object");
    reject_unknown(j,
                   {"spec_version", "command", "model", "initial_state", "integrator", "representation",
                    "sweep", "omega_loop", "output"},
                   "spec");
    if (j.contains("spec_version") && integer(j.at("spec_version"), "spec_version") != io::kSpecVersion) {
        throw SpecParseError("field spec_version: unsupported version");
    }
    if (!j.contains("command")) throw SpecParseError("field command: missing");

    RunSpec spec;
    spec.command = command_from_string(string(j.at("command"), "command"));
    spec.model = default_model(spec.command);

    if (j.contains("model")) {
        const json& m = object_at(j, "model", "model");
        if (!m.contains("type")) throw SpecParseError("field model.type: missing");
        spec.model.type = model_type_from_string(string(m.at("type"), "model.type"));
        spec.model_given = true;
        for (const auto& item : m.items()) {
            if (item.key() == "type") continue;
            if (item.key() == "R" && item.value().is_null()) {
                spec.model.circuit.resistance.reset();
                continue;
            }
            set_model_value(spec.model, item.key(), number(item.value(), "model." + item.key()));
        }
    }

    if (j.contains("initial_state")) {
        const json& s = object_at(j, "initial_state", "initial_state");
        reject_unknown(s, {"theta0", "phi0", "psi", "v", "vdot"}, "initial_state");
        if (s.contains("theta0")) spec.bloch.theta0 = number(s.at("theta0"), "initial_state.theta0");
        if (s.contains("phi0")) spec.bloch.phi0 = number(s.at("phi0"), "initial_state.phi0");
        if (s.contains("psi")) {
            const auto p = numbers(s.at("psi"), 4, "initial_state.psi");
            spec.psi = ComplexVector2{{p[0], p[1]}, {p[2], p[3]}};
        }
        if (s.contains("v")) {
            const auto v = numbers(s.at("v"), 2, "initial_state.v");
            spec.voltage = {v[0], v[1]};
        }
        if (s.contains("vdot")) {
            const auto v = numbers(s.at("vdot"), 2, "initial_state.vdot");
            spec.voltage_rate = {v[0], v[1]};
        }
    }

    if (j.contains("integrator")) {
        const json& c = object_at(j, "integrator", "integrator");
        reject_unknown(c, {"step", "duration", "stride"}, "integrator");
        if (c.contains("step")) spec.integrator.step = number(c.at("step"), "integrator.step");
        if (c.contains("duration")) spec.integrator.duration = number(c.at("duration"), "integrator.duration");
        if (c.contains("stride")) spec.integrator.record_stride = integer(c.at("stride"), "integrator.stride");
    }

    if (j.contains("representation")) {
        try {
            spec.representation = representation_from_string(string(j.at("representation"), "representation"));
        } catch (const InvalidParameter& e) {
            throw SpecParseError(std::string("field representation: ") + e.what());
        }
    }

    if (j.contains("sweep")) {
        const json& s = object_at(j, "sweep", "sweep");
        reject_unknown(s, {"gamma_max", "steps"}, "sweep");
        if (s.contains("gamma_max")) spec.gamma_max = number(s.at("gamma_max"), "sweep.gamma_max");
        if (s.contains("steps")) spec.sweep_steps = integer(s.at("steps"), "sweep.steps");
    }

    if (j.contains("omega_loop")) spec.omega_loop = number(j.at("omega_loop"), "omega_loop");

    if (j.contains("output")) {
        const json& o = object_at(j, "output", "output");
        reject_unknown(o, {"path", "format"}, "output");
        if (o.contains("path")) spec.output_path = string(o.at("path"), "output.path");
        if (o.contains("format")) spec.output_format = io::format_from_string(string(o.at("format"), "output.format"));
    }
    return spec;
}

RunSpec load_run_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open spec file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_run_spec(text.str());
    } catch (const SpecParseError& e) {
        throw SpecParseError(path + ": " + e.what());
    }
}

int run(const RunSpec& spec, std::ostream& log) {
    return run_with_format(spec, spec.output_format, log);
}

int run_with_format(const RunSpec& spec, io::Format fmt, std::ostream& log) {
    switch (spec.command) {
        case Command::Evolve:
            io::export_trajectory(run_evolution(spec), fmt, spec.output_path);
            return kSuccess;
        case Command::Phases: {
            const json j = phases_json(spec);
            io::write_text(spec.output_path, fmt == io::Format::JSON ? dump(j) : phases_csv(j));
            return kSuccess;
        }
        case Command::Sweep: {
            if (spec.model.type != ModelType::Circuit) {
                throw SpecParseError("field model.type: sweep needs a circuit model");
            }
            const auto sweep = gamma_sweep(spec.model.circuit, sweep_grid(spec));
            if (fmt == io::Format::CSV) {
                std::ostringstream text;
                io::write_sweep_csv(sweep, text);
                io::write_text(spec.output_path, text.str());
            } else {
                io::write_text(spec.output_path, dump(io::sweep_to_json(sweep)));
            }
            return kSuccess;
        }
        case Command::Circuit:
            run_circuit(spec, fmt);
            return kSuccess;
        case Command::Check: {
            const auto results = run_self_checks(self_check_seed());
            bool ok = true;
            json report = json::array();
            for (const auto& r : results) {
                log << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
                ok = ok && r.passed;
                report.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            }
            if (!spec.output_path.empty()) {
                io::write_text(spec.output_path,
                               dump({{"spec_version", io::kSpecVersion}, {"command", "check"}, {"results", report}}));
            }
            return ok ? kSuccess : kCheckFailed;
        }
    }
    return kSpecError;
}

int main(int argc, char** argv) {
    CLI::App app{"Geometric phases of two-level systems and their resonant-circuit analogs", "geophase"};
    std::string command_name;
    std::string spec_file;
    std::string model_type;
    std::vector<std::string> params;
    std::optional<double> theta0, phi0, step, duration, gamma_max, omega_loop;
    std::optional<int> stride, steps;
    std::vector<double> psi, v0, vdot0;
    std::string representation, out, format;

    app.add_option("command", command_name, "evolve | phases | sweep | circuit | check")
        ->required()
        ->check(CLI::IsMember({"evolve", "phases", "sweep", "circuit", "check"}));
    app.add_option("--spec", spec_file, "JSON run specification; flags override its fields");
    app.add_option("--model", model_type, "hermitian | pt_dimer | circuit")
        ->check(CLI::IsMember({"hermitian", "pt_dimer", "circuit"}));
    app.add_option("-p,--param", params, "model parameter key=value (h f g | a g s | L C Gg R)");
    app.add_option("--theta0", theta0, "Bloch polar angle of the initial state (rad)");
    app.add_option("--phi0", phi0, "Bloch azimuth of the initial state (rad)");
    app.add_option("--psi", psi, "raw initial state re1 im1 re2 im2")->expected(4)->delimiter(',');
    app.add_option("--v0", v0, "initial circuit voltages v1 v2")->expected(2)->delimiter(',');
    app.add_option("--vdot0", vdot0, "initial voltage rates")->expected(2)->delimiter(',');
    app.add_option("--step", step, "integration step");
    app.add_option("--duration", duration, "integration time span");
    app.add_option("--stride", stride, "record every n-th step");
    app.add_option("--representation", representation, "complex2 | real4 | second_order2")
        ->check(CLI::IsMember({"complex2", "real4", "second_order2"}));
    app.add_option("--gamma-max", gamma_max, "largest gamma of the sweep grid");
    app.add_option("--steps", steps, "number of sweep grid points");
    app.add_option("--omega-loop", omega_loop, "loop frequency Omega for the PT modified period");
    app.add_option("-o,--out", out, "output file (stdout when omitted)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kSpecError;
    }

    try {
        const Command command = command_from_string(command_name);
        RunSpec spec;
        bool explicit_format = false;
        if (!spec_file.empty()) {
            spec = load_run_spec(spec_file);
            if (spec.command != command) {
                throw SpecParseError("spec file command '" + std::string(to_string(spec.command)) +
                                     "' does not match '" + command_name + "'");
            }
            std::ifstream probe(spec_file);
            std::ostringstream text;
            text << probe.rdbuf();
            const json raw = json::parse(text.str());
            explicit_format = raw.contains("output") && raw.at("output").contains("format");
        } else {
            spec.command = command;
            spec.model = default_model(command);
        }

        if (!model_type.empty()) {
            const ModelType t = model_type_from_string(model_type);
            if (!spec.model_given || spec.model.type != t) {
                spec.model = ModelSpec{};
                spec.model.type = t;
                if (t == ModelType::Circuit) spec.model.circuit = default_model(Command::Circuit).circuit;
            }
            spec.model_given = true;
        }
        for (const auto& p : params) set_model_param(spec.model, p);
        if (theta0) spec.bloch.theta0 = *theta0;
        if (phi0) spec.bloch.phi0 = *phi0;
        if (!psi.empty()) spec.psi = ComplexVector2{{psi[0], psi[1]}, {psi[2], psi[3]}};
        if (!v0.empty()) spec.voltage = {v0[0], v0[1]};
        if (!vdot0.empty()) spec.voltage_rate = {vdot0[0], vdot0[1]};
        if (step) spec.integrator.step = *step;
        if (duration) spec.integrator.duration = *duration;
        if (stride) spec.integrator.record_stride = *stride;
        if (!representation.empty()) spec.representation = representation_from_string(representation);
        if (gamma_max) spec.gamma_max = *gamma_max;
        if (steps) spec.sweep_steps = *steps;
        if (omega_loop) spec.omega_loop = *omega_loop;
        if (!out.empty()) spec.output_path = out;
        if (!format.empty()) {
            spec.output_format = io::format_from_string(format);
            explicit_format = true;
        }
        return run_with_format(spec, output_format(spec, explicit_format), std::cout);
    } catch (const SpecParseError& e) {
        std::cerr << "geophase: spec error: " << e.what() << '\n';
        return kSpecError;
    } catch (const IOError& e) {
        std::cerr << "geophase: I/O error: " << e.what() << '\n';
        return kIOError;
    } catch (const DomainError& e) {
        std::cerr << "geophase: domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "geophase: error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace geophase::cli
