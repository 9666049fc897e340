#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cedf/cedf.hpp"
#include "cedf/constructions.hpp"
#include "cedf/decomposition.hpp"
#include "cedf/json_io.hpp"
#include "cedf/search.hpp"

namespace py = pybind11;
using namespace cedf;

PYBIND11_MODULE(_cedf, m) {
    m.doc() = "Circular external difference families over cyclic groups";

    py::class_<CedfParams>(m, "CedfParams")
        .def(py::init([](i64 v, int m_, int l, int lam) {
                 return CedfParams{v, m_, l, lam};
             }),
             py::arg("v"), py::arg("m"), py::arg("l"), py::arg("lam") = 1)
        .def_readwrite("v", &CedfParams::v)
        .def_readwrite("m", &CedfParams::m)
        .def_readwrite("l", &CedfParams::l)
        .def_readwrite("lam", &CedfParams::lambda)
        .def("satisfies_necessary_condition", &CedfParams::satisfies_necessary_condition)
        .def("__repr__", [](const CedfParams& p) {
            return "CedfParams(v=" + std::to_string(p.v) + ", m=" + std::to_string(p.m) +
                   ", l=" + std::to_string(p.l) + ", lam=" + std::to_string(p.lambda) + ")";
        });

    py::class_<Cedf>(m, "Cedf")
        .def(py::init([](i64 v, int m_, int l, int lam, std::vector<std::vector<i64>> blocks) {
                 return make_cedf({v, m_, l, lam}, std::move(blocks));
             }),
             py::arg("v"), py::arg("m"), py::arg("l"), py::arg("lam"), py::arg("blocks"))
        .def_readonly("params", &Cedf::params)
        .def_readonly("blocks", &Cedf::blocks)
        .def("to_json", [](const Cedf& c) { return cedf_to_json(c); })
        .def("__eq__", [](const Cedf& a, const Cedf& b) { return a == b; })
        .def("__repr__", [](const Cedf& c) { return cedf_to_json(c); });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("is_valid", &VerifyReport::is_valid)
        .def_readonly("disjoint", &VerifyReport::disjoint)
        .def_readonly("sizes_ok", &VerifyReport::sizes_ok)
        .def_readonly("multiset_ok", &VerifyReport::multiset_ok)
        .def_property_readonly("deviation", [](const VerifyReport& r) {
            std::vector<std::tuple<i64, i64, i64>> out;
            for (const auto& d : r.deviation) out.emplace_back(d.residue, d.observed, d.expected);
            return out;
        });

    m.def("cedf_from_json", &cedf_from_json, py::arg("text"));
    m.def(
        "verify", [](const Cedf& c, int offset) { return verify(c, offset); }, py::arg("cedf"),
        py::arg("offset") = 1);
    m.def(
        "external_differences",
        [](const Cedf& c, int offset) { return external_differences(c, offset).entries(); },
        py::arg("cedf"), py::arg("offset") = 1);

    m.def("construct_l2", &construct_l2, py::arg("m"));
    m.def("construct_m3", &construct_m3, py::arg("l"));
    m.def("construct_prime_field", &construct_prime_field, py::arg("q"), py::arg("m"),
          py::arg("l"));
    m.def("check_coset_condition", &check_coset_condition, py::arg("q"), py::arg("alpha"),
          py::arg("m"), py::arg("l"));

    m.def("translate", &translate);
    m.def("scale", &scale);
    m.def("rotate", &rotate);
    m.def("reverse", &reverse);
    m.def("canonical_form", &canonical_form);

    m.def(
        "psi", [](i64 alpha, int k) { return psi(alpha, k); }, py::arg("alpha"), py::arg("k"));
    m.def(
        "decompose_alpha",
        [](i64 alpha, int k) {
            auto d = decompose_alpha(alpha, k);
            return std::make_tuple(d.a, d.b, d.eps);
        },
        py::arg("alpha"), py::arg("k"));
    m.def(
        "solve_congruence_box",
        [](int k, const std::string& box) {
            return solve_congruence_box(
                k, box == "Zprime" ? CongruenceBox::shifted(k) : CongruenceBox::standard(k));
        },
        py::arg("k"), py::arg("box") = "Z");

    m.def(
        "existence_query",
        [](i64 v, int m_, int l, int lam) {
            auto ans = existence_query(v, m_, l, lam);
            const char* status = ans.status == Existence::exists       ? "exists"
                                 : ans.status == Existence::not_exists ? "not_exists"
                                                                       : "unknown";
            return std::make_pair(std::string(status), ans.reason);
        },
        py::arg("v"), py::arg("m"), py::arg("l"), py::arg("lam") = 1);

    m.def(
        "search",
        [](i64 v, int m_, int l, int lam, i64 max_results, bool symmetry_break, double budget,
           bool canonical, int threads) {
            SearchConfig cfg;
            cfg.params = {v, m_, l, lam};
            cfg.max_results = max_results;
            cfg.symmetry_break = symmetry_break;
            cfg.time_budget_s = budget;
            cfg.canonicalize_output = canonical;
            cfg.threads = threads;
            auto out = search_cedf(cfg);
            const char* status = out.status == SearchStatus::found ? "found"
                                 : out.status == SearchStatus::exhausted_none ? "exhausted_none"
                                                                              : "inconclusive";
            return std::make_tuple(std::string(status), out.results, out.nodes_explored);
        },
        py::arg("v"), py::arg("m"), py::arg("l"), py::arg("lam") = 1, py::arg("max_results") = 1,
        py::arg("symmetry_break") = true, py::arg("budget") = 0.0, py::arg("canonical") = false,
        py::arg("threads") = 1);
    m.def("count_canonical", [](i64 v, int m_, int l, int lam, double budget) {
        auto c = count_canonical({v, m_, l, lam}, budget);
        return c ? py::cast(*c) : py::object(py::none());
    }, py::arg("v"), py::arg("m"), py::arg("l"), py::arg("lam") = 1, py::arg("budget") = 0.0);

    m.def("develop_and_check", [](const Cedf& c) {
        auto rep = verify_decomposition(develop(c));
        return std::make_tuple(rep.valid, rep.arcs_total, rep.deviations.size());
    });

    m.def("is_prime", &is_prime);
    m.def("find_primitive_element", [](i64 q) { return find_primitive_element(q).value; });
    m.def("subgroup", &subgroup, py::arg("beta"), py::arg("q"));
    m.def("interval", &interval, py::arg("x"), py::arg("y"), py::arg("d") = 1);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
