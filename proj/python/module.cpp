#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverdt/dt.hpp"
#include "quiverdt/kac.hpp"
#include "quiverdt/oracle.hpp"

namespace py = pybind11;
using namespace quiverdt;

namespace {

py::list laurent_terms(const Laurent& f) {
    // [(exponent_in_v, "coeff"), ...]
    py::list out;
    for (auto& [e, c] : f.terms()) out.append(py::make_tuple(e, rat_to_string(c)));
    return out;
}

py::dict dt_entry_dict(const DTEntry& e) {
    py::dict d;
    d["omega"] = laurent_terms(e.omega);
    d["omega_neg"] = laurent_terms(e.omega_neg);
    d["omega_neg_str"] = e.omega_neg.to_q_string();
    d["positive"] = e.positive;
    d["integral"] = e.integral;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact motivic DT invariants, Kac polynomials, and refined Hua series";

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](int vertices, IntMatrix arrows) {
                 Quiver q{vertices, std::move(arrows)};
                 q.validate();
                 return q;
             }),
             py::arg("vertices"), py::arg("arrow_matrix"))
        .def_static("loop", &Quiver::loop_quiver, py::arg("loops"))
        .def_static("two_vertex", &Quiver::two_vertex, py::arg("loops"), py::arg("arrows_each_way"))
        .def_readonly("r", &Quiver::r)
        .def_readonly("arrow_matrix", &Quiver::arrows)
        .def("euler_form", &Quiver::euler_form)
        .def("tits_form", &Quiver::tits_form)
        .def("antisym_form", &Quiver::antisym_form)
        .def("is_symmetric", &Quiver::is_symmetric)
        .def("has_enough_loops", &Quiver::has_enough_loops);

    m.def(
        "dt_invariants",
        [](const Quiver& q, int bound) {
            py::dict out;
            for (auto& [al, e] : dt_invariants(q, bound).entries)
                out[py::tuple(py::cast(al))] = dt_entry_dict(e);
            return out;
        },
        py::arg("quiver"), py::arg("bound"));

    m.def(
        "kac_polynomials",
        [](const Quiver& q, int bound) {
            py::dict out;
            for (auto& [al, e] : kac_polynomials(q, bound).entries) {
                py::dict d;
                d["a"] = laurent_terms(e.a);
                d["a_str"] = e.a.to_q_string();
                d["in_N_of_q"] = e.in_N_of_q;
                out[py::tuple(py::cast(al))] = d;
            }
            return out;
        },
        py::arg("quiver"), py::arg("bound"));

    m.def(
        "refined_invariants",
        [](const Quiver& q, int levels, int bound) {
            py::dict out;
            for (auto& [g, e] : refined_invariants(q, levels, bound).entries) {
                py::dict d;
                d["value"] = e.b.to_string();
                if (auto l = e.b.as_laurent()) d["terms"] = laurent_terms(*l);
                d["positive"] = e.positive;
                out[py::tuple(py::cast(g))] = d;
            }
            return out;
        },
        py::arg("quiver"), py::arg("levels"), py::arg("bound"));

    m.def(
        "stable_counts",
        [](const Quiver& q, std::vector<std::string> theta, std::string slope_value, int bound) {
            Stability st;
            for (auto& t : theta) st.theta.push_back(rat_from_string(t));
            py::dict out;
            for (auto& [al, p] : stable_counts(q, st, rat_from_string(slope_value), bound))
                out[py::tuple(py::cast(al))] = p.to_q_string();
            return out;
        },
        py::arg("quiver"), py::arg("theta"), py::arg("slope"), py::arg("bound"));

    m.def(
        "count_kac",
        [](const Quiver& q, DimVector alpha, int p) { return oracle::count_kac(q, alpha, p); },
        py::arg("quiver"), py::arg("alpha"), py::arg("prime"));
    m.def(
        "count_simple",
        [](const Quiver& q, DimVector alpha, int p) { return oracle::count_simple(q, alpha, p); },
        py::arg("quiver"), py::arg("alpha"), py::arg("prime"));
    m.def(
        "burnside_check",
        [](const Quiver& q, DimVector alpha, int p) { return oracle::burnside_check(q, alpha, p); },
        py::arg("quiver"), py::arg("alpha"), py::arg("prime"));
}
