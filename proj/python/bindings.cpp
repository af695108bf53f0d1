// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>

#include "widenkit/lang/analyzer.hpp"
#include "widenkit/lang/parser.hpp"
#include "widenkit/oracle.hpp"
#include "widenkit/report.hpp"

namespace py = pybind11;
using namespace widenkit;

namespace {

// Python ints are unbounded; go through their decimal text.
Integer to_integer(const py::int_& v) { return parse_integer(std::string(py::str(static_cast<py::handle>(v)))); }

py::object from_integer(const Integer& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

// An endpoint is a Python int or ±math.inf.
ExtInt to_endpoint(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) {
        const double d = h.cast<double>();
        if (d == std::numeric_limits<double>::infinity()) {
            return ExtInt::pos_inf();
        }
        if (d == -std::numeric_limits<double>::infinity()) {
            return ExtInt::neg_inf();
        }
        throw py::value_error("interval endpoints must be int or ±math.inf");
    }
    return to_integer(py::reinterpret_borrow<py::int_>(h));
}

py::object from_endpoint(const ExtInt& e) {
    if (e.is_pos_inf()) {
        return py::float_(std::numeric_limits<double>::infinity());
    }
    if (e.is_neg_inf()) {
        return py::float_(-std::numeric_limits<double>::infinity());
    }
    return from_integer(e.value());
}

lang::Program parse_or_raise(const std::string& source) {
    try {
        return lang::parse(source);
    } catch (const lang::ParseError& e) {
        throw py::value_error(e.what());
    }
}

lang::WideningStrategy strategy_from(const std::string& widening, const std::vector<py::int_>& thresholds,
                                     std::size_t delay, const std::string& delay_base) {
    std::vector<Integer> ts;
    for (const auto& t : thresholds) {
        ts.push_back(to_integer(t));
    }
    auto base = [&](const std::string& name) {
        if (name == "naive") {
            return lang::WideningStrategy::naive();
        }
        if (name == "ramp") {
            return lang::WideningStrategy::ramp(ts);
        }
        if (name == "kleene") {
            return lang::WideningStrategy::kleene();
        }
        throw py::value_error("unknown widening '" + name + "'");
    };
    return widening == "delay" ? lang::WideningStrategy::delayed(delay, base(delay_base)) : base(widening);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interval analysis of while-programs with widening trees";

    py::register_exception<SolverDefect>(m, "SolverDefect", PyExc_RuntimeError);

    py::class_<Interval>(m, "Interval")
        .def(py::init([](const py::handle& lo, const py::handle& hi) { return Interval{to_endpoint(lo), to_endpoint(hi)}; }),
             py::arg("lo"), py::arg("hi"))
        .def_static("bottom", &Interval::bottom)
        .def_static("top", &Interval::top)
        .def_property_readonly("is_bottom", &Interval::is_bottom)
        .def_property_readonly("lo", [](const Interval& iv) { return from_endpoint(iv.lo()); })
        .def_property_readonly("hi", [](const Interval& iv) { return from_endpoint(iv.hi()); })
        .def("contains", [](const Interval& iv, const py::int_& v) { return iv.contains(to_integer(v)); })
        .def("leq", &interval_leq)
        .def("join", &interval_join)
        .def("meet", &interval_meet)
        .def("widen", &interval_widen_brutal)
        .def("__add__", [](const Interval& a, const Interval& b) { return a + b; })
        .def("__sub__", [](const Interval& a, const Interval& b) { return a - b; })
        .def("__neg__", [](const Interval& a) { return -a; })
        .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
        .def("__hash__", [](const Interval& a) { return py::hash(py::str(a.to_string())); })
        .def("__repr__", [](const Interval& a) { return "Interval(" + a.to_string() + ")"; })
        .def("__str__", &Interval::to_string);

    m.def(
        "check_syntax",
        [](const std::string& source) {
            const lang::Program p = parse_or_raise(source);
            return py::make_tuple(p.variables(), p.loop_count);
        },
        py::arg("source"), "Parse a program; returns (variables, loop count) or raises ValueError.");

    m.def(
        "analyze_json",
        [](const std::string& source, const std::string& widening, const std::vector<py::int_>& thresholds,
           std::size_t delay, const std::string& delay_base, std::size_t fuel) {
            const lang::Program p = parse_or_raise(source);
            const auto strategy = strategy_from(widening, thresholds, delay, delay_base);
            try {
                return to_json(lang::analyze(p, strategy, SolverOptions{fuel, kDefaultTraceCapacity})).dump();
            } catch (const lang::AnalysisError& e) {
                std::ostringstream os;
                os << "loop " << e.loop_id() << " (line " << e.line() << "): " << e.what();
                throw SolverDefect(e.kind(), 0, os.str());
            } catch (const std::invalid_argument& e) {
                throw py::value_error(e.what());
            }
        },
        py::arg("source"), py::arg("widening") = "naive", py::arg("thresholds") = std::vector<py::int_>{},
        py::arg("delay") = 0, py::arg("delay_base") = "naive", py::arg("fuel") = kDefaultFuel);

    m.def(
        "check_json",
        [](const std::string& source, const std::string& report_json, std::size_t max_steps, std::size_t max_states,
           std::optional<std::pair<py::int_, py::int_>> havoc_window) {
            const lang::Program p = parse_or_raise(source);
            lang::AnalysisReport report;
            try {
                report = report_from_json(Json::parse(report_json));
            } catch (const std::exception& e) {
                throw py::value_error(std::string("bad report: ") + e.what());
            }
            oracle::ExplorationBounds bounds;
            bounds.max_steps = max_steps;
            bounds.max_states = max_states;
            if (havoc_window) {
                bounds.havoc_window = oracle::HavocWindow{to_integer(havoc_window->first), to_integer(havoc_window->second)};
            }
            try {
                const auto concrete = oracle::explore(p, bounds);
                const auto verdict = oracle::check_soundness(report, concrete);
                Json out;
                out["pass"] = verdict.pass();
                out["states_checked"] = verdict.states_checked;
                out["truncated"] = concrete.truncated;
                out["counterexamples"] = Json::array();
                for (const auto& cx : verdict.counterexamples) {
                    Json state;
                    for (const auto& [k, v] : cx.state) {
                        state[k] = v.str();
                    }
                    out["counterexamples"].push_back({{"loop_id", cx.loop_id}, {"state", state}});
                }
                return out.dump();
            } catch (const oracle::ConfigurationError& e) {
                throw py::value_error(e.what());
            } catch (const oracle::StructuralError& e) {
                throw py::value_error(e.what());
            }
        },
        py::arg("source"), py::arg("report_json"), py::arg("max_steps") = 100'000, py::arg("max_states") = 100'000,
        py::arg("havoc_window") = std::optional<std::pair<py::int_, py::int_>>{});

    m.attr("DEFAULT_FUEL") = kDefaultFuel;
}
