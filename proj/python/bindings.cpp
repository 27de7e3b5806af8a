#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqhe/constants.hpp"
#include "fqhe/fraction.hpp"
#include "fqhe/landau.hpp"
#include "fqhe/oscillator.hpp"
#include "fqhe/phases.hpp"
#include "fqhe/quadrature.hpp"
#include "fqhe/special.hpp"
#include "fqhe/transport.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_fqhe, m) {
    m.doc() = "Complex-oscillator quantum Hall transport model";

    py::register_exception<fqhe::InvalidParameter>(m, "InvalidParameter",
                                                   PyExc_ValueError);
    py::register_exception<fqhe::SingularValue>(m, "SingularValue",
                                                PyExc_ZeroDivisionError);

    py::enum_<fqhe::UnitSystem>(m, "UnitSystem")
        .value("SI", fqhe::UnitSystem::SI)
        .value("Natural", fqhe::UnitSystem::Natural);

    py::enum_<fqhe::Branch>(m, "Branch")
        .value("Psi1", fqhe::Branch::Psi1)
        .value("Psi2", fqhe::Branch::Psi2);

    py::enum_<fqhe::MomentumComponent>(m, "MomentumComponent")
        .value("Pz", fqhe::MomentumComponent::Pz)
        .value("Pzbar", fqhe::MomentumComponent::Pzbar);

    py::class_<fqhe::PhysicalConstants>(m, "PhysicalConstants")
        .def_readonly("e", &fqhe::PhysicalConstants::e)
        .def_readonly("hbar", &fqhe::PhysicalConstants::hbar)
        .def_readonly("h", &fqhe::PhysicalConstants::h)
        .def_readonly("m_e", &fqhe::PhysicalConstants::m_e)
        .def_readonly("k_B", &fqhe::PhysicalConstants::k_B);

    py::class_<fqhe::Fraction>(m, "Fraction")
        .def(py::init<std::int64_t, std::int64_t>(), "num"_a, "den"_a)
        .def_property_readonly("num", &fqhe::Fraction::num)
        .def_property_readonly("den", &fqhe::Fraction::den)
        .def("value", &fqhe::Fraction::value)
        .def("__eq__",
             [](const fqhe::Fraction& a, const fqhe::Fraction& b) { return a == b; })
        .def("__repr__",
             [](const fqhe::Fraction& f) { return "Fraction(" + f.str() + ")"; })
        .def("__str__", &fqhe::Fraction::str);

    py::class_<fqhe::StateLabel>(m, "StateLabel")
        .def(py::init<fqhe::Branch, long long>(), "branch"_a, "n"_a)
        .def_readonly("branch", &fqhe::StateLabel::branch)
        .def_readonly("n", &fqhe::StateLabel::n);

    py::class_<fqhe::OscillatorParams>(m, "OscillatorParams")
        .def_static("make", &fqhe::OscillatorParams::make, "mass"_a, "omega"_a,
                    "constants"_a)
        .def_readonly("mass", &fqhe::OscillatorParams::mass)
        .def_readonly("omega", &fqhe::OscillatorParams::omega)
        .def_readonly("alpha", &fqhe::OscillatorParams::alpha);

    py::class_<fqhe::SampleGeometry>(m, "SampleGeometry")
        .def(py::init<double, double, double>(), "length"_a, "width"_a,
             "sheet_density"_a)
        .def_readonly("length", &fqhe::SampleGeometry::length)
        .def_readonly("width", &fqhe::SampleGeometry::width)
        .def_readonly("sheet_density", &fqhe::SampleGeometry::sheet_density);

    m.def("constants_for", &fqhe::constants_for, "system"_a);
    m.def("cyclotron_frequency", &fqhe::cyclotron_frequency, "b_tesla"_a,
          "mass"_a, "constants"_a);
    m.def("magnetic_length", &fqhe::magnetic_length, "b_tesla"_a, "constants"_a);
    m.def("gamma_ratio", &fqhe::gamma_ratio, "a"_a, "b"_a);

    m.def("normalization_constant", &fqhe::normalization_constant, "n"_a,
          "params"_a);
    m.def("wavefunction", &fqhe::wavefunction, "label"_a, "params"_a, "r"_a,
          "theta"_a);
    m.def("energy", &fqhe::energy, "n"_a, "params"_a, "constants"_a);
    m.def("angular_momentum_hbar", &fqhe::angular_momentum_hbar, "label"_a);
    m.def("radial_peak", &fqhe::radial_peak, "n"_a, "params"_a, "constants"_a);
    m.def("momentum_expectation", &fqhe::momentum_expectation, "label"_a,
          "component"_a, "params"_a, "constants"_a);

    m.def("current_moment", &fqhe::current_moment, "label"_a, "params"_a,
          "constants"_a);
    m.def("fractional_charge",
          py::overload_cast<fqhe::Branch, long long>(&fqhe::fractional_charge),
          "branch"_a, "n"_a);
    m.def("conjugate_series", &fqhe::conjugate_series, "n_max"_a);
    m.def("hall_conductivity", &fqhe::hall_conductivity, "branch"_a, "n"_a);
    m.def("hall_conductivity_siemens", &fqhe::hall_conductivity_siemens,
          "branch"_a, "n"_a, "constants"_a);
    m.def("hall_resistance", &fqhe::hall_resistance, "branch"_a, "n"_a,
          "constants"_a);
    m.def("characteristic_current", &fqhe::characteristic_current, "geometry"_a,
          "mass"_a, "constants"_a);
    m.def("sheet_current", &fqhe::sheet_current, "n"_a, "geometry"_a, "omega"_a,
          "mass"_a, "constants"_a);
    m.def("longitudinal_resistance", &fqhe::longitudinal_resistance, "n"_a,
          "v_x"_a, "geometry"_a, "omega"_a, "mass"_a, "constants"_a);
    m.def("hall_mobility", &fqhe::hall_mobility, "n"_a, "v_x"_a, "geometry"_a,
          "omega"_a, "mass"_a, "constants"_a);
    m.def("hall_voltage", &fqhe::hall_voltage, "n"_a, "geometry"_a, "omega"_a,
          "mass"_a, "constants"_a);

    m.def("level_index", &fqhe::level_index, "b_tesla"_a, "sheet_density"_a,
          "constants"_a);
    m.def("allowed_fields", &fqhe::allowed_fields, "sheet_density"_a, "n_max"_a,
          "constants"_a);
    m.def("magnetic_density", &fqhe::magnetic_density, "b_tesla"_a, "constants"_a);
    m.def("plateau_width", &fqhe::plateau_width, "n"_a, "sheet_density"_a,
          "constants"_a);
    m.def("klitzing_resistance", &fqhe::klitzing_resistance, "i"_a, "constants"_a);
    m.def(
        "hall_temperature",
        [](double sheet_density, double mass, const fqhe::PhysicalConstants& pc) {
            return fqhe::hall_temperature(sheet_density, mass, pc).kelvin;
        },
        "sheet_density"_a, "mass"_a, "constants"_a);

    py::class_<fqhe::SweepConfig>(m, "SweepConfig")
        .def(py::init([](double b_min, double b_max, long long steps,
                         const fqhe::SampleGeometry& geometry, double v_x,
                         fqhe::Branch branch) {
                 return fqhe::SweepConfig{b_min, b_max, steps, geometry, v_x,
                                          branch};
             }),
             "b_min"_a, "b_max"_a, "steps"_a, "geometry"_a, "v_x"_a, "branch"_a);

    py::class_<fqhe::SweepRecord>(m, "SweepRecord")
        .def_readonly("b", &fqhe::SweepRecord::b)
        .def_readonly("n_cont", &fqhe::SweepRecord::n_cont)
        .def_readonly("n_int", &fqhe::SweepRecord::n_int)
        .def_readonly("on_crossing", &fqhe::SweepRecord::on_crossing)
        .def_readonly("r_hall", &fqhe::SweepRecord::r_hall)
        .def_readonly("r_xx", &fqhe::SweepRecord::r_xx)
        .def_readonly("sigma_xy", &fqhe::SweepRecord::sigma_xy)
        .def_readonly("filling_i", &fqhe::SweepRecord::filling_i);

    m.def("run_sweep", &fqhe::run_sweep, "config"_a, "constants"_a);

    m.def("filling_ratio", &fqhe::filling_ratio, "branch"_a, "n"_a);
    m.def("conjugation_check", &fqhe::conjugation_check, "n"_a);
    m.def("electron_composition", &fqhe::electron_composition, "n"_a);
    m.def("ab_phase", &fqhe::ab_phase, "charge"_a, "flux_weber"_a, "constants"_a);
    m.def("flux_quantization", &fqhe::flux_quantization, "branch"_a, "n"_a,
          "winding"_a);
}
