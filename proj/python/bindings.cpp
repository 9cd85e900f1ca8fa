#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geophase/circuits.hpp"
#include "geophase/decomplexify.hpp"
#include "geophase/errors.hpp"
#include "geophase/evolution.hpp"
#include "geophase/hamiltonian_models.hpp"
#include "geophase/phases.hpp"
#include "geophase/selfcheck.hpp"

namespace py = pybind11;
using namespace geophase;

namespace {

using Matrix = std::array<std::array<Complex, 2>, 2>;

ComplexMatrix2 to_matrix(const Matrix& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }
Matrix from_matrix(const ComplexMatrix2& m) { return {{{m.h11, m.h12}, {m.h21, m.h22}}}; }
ComplexVector2 to_vector(const std::array<Complex, 2>& v) { return {v[0], v[1]}; }
std::array<Complex, 2> from_vector(const ComplexVector2& v) { return {v.c1, v.c2}; }

py::dict trajectory_dict(const Trajectory& t) {
    py::array_t<double> times(static_cast<py::ssize_t>(t.size()));
    std::copy(t.times.begin(), t.times.end(), times.mutable_data());
    py::array_t<double> states({static_cast<py::ssize_t>(t.size()), static_cast<py::ssize_t>(t.dim)});
    std::copy(t.values.begin(), t.values.end(), states.mutable_data());
    py::dict d;
    d["representation"] = to_string(t.representation);
    d["times"] = times;
    d["states"] = states;
    d["step"] = t.step;
    d["record_stride"] = t.record_stride;
    return d;
}

Trajectory second_order_trajectory(py::array_t<double, py::array::c_style | py::array::forcecast> times,
                                   py::array_t<double, py::array::c_style | py::array::forcecast> states,
                                   const std::map<std::string, double>& parameters) {
    if (states.ndim() != 2 || states.shape(1) != 2 || times.ndim() != 1 || times.shape(0) != states.shape(0)) {
        throw InvalidParameter("expected times (n,) and states (n, 2)");
    }
    Trajectory t;
    t.representation = Representation::SecondOrder2;
    t.dim = 2;
    t.times.assign(times.data(), times.data() + times.shape(0));
    t.values.assign(states.data(), states.data() + states.size());
    t.step = t.size() > 1 ? t.times[1] - t.times[0] : 0.0;
    t.parameters = parameters;
    return t;
}

IntegratorConfig config(double step, double duration, int stride) { return {step, duration, stride}; }

py::dict eigen_dict(const EigenSystem2& es) {
    py::dict d;
    d["eigenvalues"] = std::array<Complex, 2>{es.eigenvalue1, es.eigenvalue2};
    d["eigenvectors"] = std::array<std::array<Complex, 2>, 2>{from_vector(es.eigenvector1), from_vector(es.eigenvector2)};
    d["degenerate"] = es.degenerate;
    d["defective"] = es.defective;
    return d;
}

const char* ep_name(EPClass c) { return to_string(c); }

}  // namespace

PYBIND11_MODULE(_geophase, m) {
    m.doc() = "Two-level geometric phases, decomplexification and gyrator circuits";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", domain.ptr());
    py::register_exception<ExceptionalPoint>(m, "ExceptionalPoint", domain.ptr());
    py::register_exception<BrokenPhase>(m, "BrokenPhase", domain.ptr());
    py::register_exception<DegenerateSpectrum>(m, "DegenerateSpectrum", domain.ptr());
    py::register_exception<NonPositiveRate>(m, "NonPositiveRate", domain.ptr());
    py::register_exception<SingularB>(m, "SingularB", domain.ptr());
    py::register_exception<StepTooLarge>(m, "StepTooLarge", domain.ptr());
    py::register_exception<WrongRepresentation>(m, "WrongRepresentation", domain.ptr());
    py::register_exception<ScaleSeparationViolated>(m, "ScaleSeparationViolated", domain.ptr());
    py::register_exception<UnexpectedResistor>(m, "UnexpectedResistor", domain.ptr());

    m.def("eig2", [](const Matrix& h) { return eigen_dict(eig2(to_matrix(h))); }, py::arg("h"));
    m.def(
        "biorthogonal",
        [](const Matrix& h) {
            const BiorthogonalBasis b = biorthogonal(to_matrix(h));
            py::dict d;
            d["eigenvalues"] = b.eigenvalues;
            d["right"] = std::array<std::array<Complex, 2>, 2>{from_vector(b.right[0]), from_vector(b.right[1])};
            d["left"] = std::array<std::array<Complex, 2>, 2>{from_vector(b.left[0]), from_vector(b.left[1])};
            return d;
        },
        py::arg("h"));

    m.def("hermitian", [](double h, double f, double g) { return from_matrix(build_hermitian({h, f, g}).matrix()); },
          py::arg("h"), py::arg("f"), py::arg("g"));
    m.def("pt_dimer", [](double a, double g, double s) { return from_matrix(build_pt_dimer({a, g, s}).matrix()); },
          py::arg("a"), py::arg("g"), py::arg("s"));
    m.def(
        "pt_realization",
        [](double a, double g, double s) { return to_string(pt_symmetry_check(build_pt_dimer({a, g, s})).realization); },
        py::arg("a"), py::arg("g"), py::arg("s"));

    m.def(
        "integrate_schrodinger",
        [](const Matrix& h, const std::array<Complex, 2>& psi0, double step, double duration, int stride) {
            return trajectory_dict(integrate_schrodinger(to_matrix(h), to_vector(psi0), config(step, duration, stride)));
        },
        py::arg("h"), py::arg("psi0"), py::arg("step"), py::arg("duration"), py::arg("stride") = 1);
    m.def(
        "integrate_real4",
        [](const Matrix& h, const std::array<Complex, 2>& psi0, double step, double duration, int stride) {
            return trajectory_dict(integrate_real4(real4(to_matrix(h)), to_real4(to_vector(psi0)),
                                                   config(step, duration, stride)));
        },
        py::arg("h"), py::arg("psi0"), py::arg("step"), py::arg("duration"), py::arg("stride") = 1);
    m.def(
        "integrate_second_order",
        [](const Matrix& h, const std::array<Complex, 2>& psi0, double step, double duration, int stride) {
            const RealSplit rs = split(to_matrix(h));
            const ComplexVector2 psi = to_vector(psi0);
            const Eigen::Vector2d x0{psi.c1.real(), psi.c2.real()};
            const Eigen::Vector2d y0{psi.c1.imag(), psi.c2.imag()};
            return trajectory_dict(integrate_second_order(second_order(rs, SecondOrderVariable::X), x0,
                                                          initial_derivative(rs, SecondOrderVariable::X, x0, y0),
                                                          config(step, duration, stride)));
        },
        py::arg("h"), py::arg("psi0"), py::arg("step"), py::arg("duration"), py::arg("stride") = 1,
        "Propagates x = Re(psi) through its second-order equation.");

    m.def("total_phase", &total_phase, py::arg("lambda1"), py::arg("lambda2"));
    m.def(
        "dynamic_phase",
        [](double l1, double l2, double theta0) { return dynamic_phase(l1, l2, {theta0, 0.0}); },
        py::arg("lambda1"), py::arg("lambda2"), py::arg("theta0"));
    m.def("berry_phase", [](double theta0) { return berry_phase({theta0, 0.0}); }, py::arg("theta0"));
    m.def("hannay_angle", &hannay_angle, py::arg("theta"));
    m.def("return_period", &return_period, py::arg("lambda1"), py::arg("lambda2"));
    m.def(
        "biorthogonal_dynamic_phase",
        [](double a, double g, double s, double theta0, double phi0) {
            return biorthogonal_dynamic_phase(build_pt_dimer({a, g, s}), {theta0, phi0});
        },
        py::arg("a"), py::arg("g"), py::arg("s"), py::arg("theta0"), py::arg("phi0") = 0.0);
    m.def("pt_modified_period", &pt_modified_period, py::arg("g"), py::arg("gamma"), py::arg("omega_loop"));
    m.def("pt_geometric_phase", &pt_geometric_phase, py::arg("g"), py::arg("gamma"), py::arg("omega_loop"));

    m.def(
        "circuit_run",
        [](double omega0, double coupling, double loss, double step, double duration, int stride) {
            const CircuitRates r{omega0, coupling, loss};
            Trajectory t = integrate_second_order(pt_circuit_system(r), {1.0, 0.0}, {0.0, 0.0},
                                                  config(step, duration, stride));
            py::dict d = trajectory_dict(t);
            d["parameters"] = std::map<std::string, double>{{"omega0", omega0}, {"coupling", coupling}, {"loss", loss}};
            return d;
        },
        py::arg("omega0"), py::arg("coupling"), py::arg("loss") = 0.0, py::arg("step") = 1e-3,
        py::arg("duration") = 10.0, py::arg("stride") = 1,
        "Gyrator-coupled LC pair started from v = (1, 0) at rest.");
    m.def(
        "extract_precession",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> times,
           py::array_t<double, py::array::c_style | py::array::forcecast> states,
           const std::map<std::string, double>& parameters) {
            const PrecessionEstimate e = extract_precession(second_order_trajectory(times, states, parameters));
            py::dict d;
            d["rate"] = e.rate;
            d["carrier"] = e.carrier;
            d["coupling"] = e.coupling;
            d["times"] = e.times;
            d["angles"] = e.angles;
            return d;
        },
        py::arg("times"), py::arg("states"), py::arg("parameters") = std::map<std::string, double>{});

    m.def(
        "circuit_spectrum",
        [](double omega0, double coupling, double loss) {
            const SpectrumPoint p = circuit_spectrum(CircuitRates{omega0, coupling, loss});
            return py::make_tuple(p.modes, ep_name(p.classification));
        },
        py::arg("omega0"), py::arg("coupling"), py::arg("loss") = 0.0);
    m.def(
        "gamma_sweep",
        [](double inductance, double capacitance, double gyrator_conductance, const std::vector<double>& grid) {
            const auto sweep = gamma_sweep({inductance, capacitance, gyrator_conductance, std::nullopt}, grid);
            py::list out;
            for (const auto& p : sweep) {
                py::dict d;
                d["gamma"] = p.gamma;
                d["modes"] = p.normalized_modes();
                d["classification"] = ep_name(p.classification);
                out.append(d);
            }
            return out;
        },
        py::arg("inductance"), py::arg("capacitance"), py::arg("gyrator_conductance"), py::arg("gamma_grid"),
        "Mode values normalized by omega0.");

    m.def(
        "self_check",
        [](std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_self_checks(seed)) out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("seed") = 20240601ULL);
}
