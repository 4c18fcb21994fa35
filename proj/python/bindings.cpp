#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trmod/io.hpp"

namespace py = pybind11;
using namespace trmod;
using io::json;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Matrix to_matrix(const Algebra& A, const py::object& m) {
    if (py::isinstance<py::str>(m)) return parse_matrix(A, m.cast<std::string>());
    auto rows = m.cast<std::vector<std::vector<std::string>>>();
    return parse_matrix(A, rows);
}

py::object matrix_out(const Algebra& A, const Matrix& M) { return py::cast(format_entries(A, M)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

    py::class_<Algebra>(m, "Ring")
        .def(py::init([](const std::string& source) { return io::load_ring(source); }), py::arg("source"))
        .def_static("from_spec", [](const py::dict& spec) {
            auto text = py::module_::import("json").attr("dumps")(spec).cast<std::string>();
            return Algebra::build(io::ring_spec_from_json(json::parse(text)));
        })
        .def_property_readonly("characteristic", &Algebra::characteristic)
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("basis", &Algebra::basis_names)
        .def_property_readonly("hilbert_series", [](const Algebra& A) {
            auto h = A.hilbert_series();
            return py::make_tuple(h.h0, h.h1, h.h2);
        })
        .def("normalize", [](const Algebra& A, const std::string& s) { return A.format(A.parse(s)); })
        .def("mul", [](const Algebra& A, const std::string& a, const std::string& b) {
            return A.format(A.mul(A.parse(a), A.parse(b)));
        })
        .def("check", [](const Algebra& A) { return to_python(io::to_json(ring_preconditions(A))); })
        .def("exact_zero_divisors", [](const Algebra& A) { return to_python(io::to_json(A, enumerate_ezd(A))); })
        .def("partner", [](const Algebra& A, const std::string& a) -> std::optional<std::string> {
            auto b = exact_zero_divisor_partner(A, A.parse(a));
            if (!b) return std::nullopt;
            return A.format(*b);
        })
        .def("__repr__", [](const Algebra& A) {
            return "<Ring over F_" + std::to_string(A.characteristic()) + ", dim " + std::to_string(A.dim()) + ">";
        });

    m.def("minimize", [](const Algebra& A, const py::object& M) { return matrix_out(A, minimize(A, to_matrix(A, M))); });
    m.def("syzygy", [](const Algebra& A, const py::object& M) { return matrix_out(A, syzygy(A, to_matrix(A, M))); });
    m.def("coker_length", [](const Algebra& A, const py::object& M) { return coker_length(A, to_matrix(A, M)); });

    m.def(
        "check_totally_reflexive",
        [](const Algebra& A, const py::object& M, int depth) {
            auto cert = check_totally_reflexive(A, to_matrix(A, M), depth);
            return to_python(io::to_json(A, cert));
        },
        py::arg("ring"), py::arg("matrix"), py::arg("depth") = 32);

    m.def("check_upper_triangular", [](const Algebra& A, const py::object& M, bool cross_validate) {
        auto r = check_ut_tr(A, to_matrix(A, M), cross_validate);
        py::dict out;
        out["totally_reflexive"] = r.totally_reflexive;
        py::list diag;
        for (const auto& d : r.diagonal) diag.append(A.format(d));
        out["diagonal"] = diag;
        out["cross_check"] = r.cross_check ? py::cast(*r.cross_check) : py::none();
        out["reduced"] = r.reduced ? matrix_out(A, *r.reduced) : py::none();
        return out;
    }, py::arg("ring"), py::arg("matrix"), py::arg("cross_validate") = false);

    m.def("ext1", [](const Algebra& A, const py::object& N, const py::object& M) {
        return to_python(io::to_json(A, ext1(A, to_matrix(A, N), to_matrix(A, M))));
    });

    m.def("gamma", [](const Algebra& A, const py::object& N, const py::object& T) {
        auto g = gamma(A, to_matrix(A, N), to_matrix(A, T));
        return py::dict(py::arg("rank") = g.rank, py::arg("unit_part") = g.unit_part, py::arg("gamma") = g.gamma);
    });

    m.def("pushout_middle", [](const Algebra& A, const std::string& u, const std::string& v, const std::string& alpha) {
        return matrix_out(A, pushout_middle(A, A.parse(u), A.parse(v), A.parse(alpha)));
    });

    m.def("filtrate", [](const Algebra& A, const py::object& M) {
        return to_python(io::to_json(A, filtrate_ut(A, to_matrix(A, M))));
    });

    m.def(
        "find_ut_form",
        [](const Algebra& A, const py::object& M, long long budget) {
            Budget b{budget, 0};
            auto X = to_matrix(A, M);
            UTSearch s;
            {
                py::gil_scoped_release release;
                s = find_ut_form(A, X, b);
            }
            return to_python(io::to_json(A, s));
        },
        py::arg("ring"), py::arg("matrix"), py::arg("budget") = 5'000'000);

    m.def(
        "is_equivalent",
        [](const Algebra& A, const py::object& M1, const py::object& M2, long long budget) -> py::object {
            Budget b{budget, 0};
            auto w = is_equivalent(A, to_matrix(A, M1), to_matrix(A, M2), b);
            if (!w) return py::none();
            return to_python(io::to_json(A, *w));
        },
        py::arg("ring"), py::arg("m1"), py::arg("m2"), py::arg("budget") = 5'000'000);

    m.def(
        "classify_ut2",
        [](const Algebra& A, long long budget, int jobs) {
            Budget b{budget, 0};
            ClassTable t;
            {
                py::gil_scoped_release release;
                t = classify_ut2(A, b, jobs);
            }
            return to_python(io::to_json(A, t));
        },
        py::arg("ring"), py::arg("budget") = 50'000'000, py::arg("jobs") = 1);

    m.def("mb_matrix", [](const Algebra& A, int b, const std::string& s, const std::string& t, const std::string& u,
                          const std::string& v) {
        return matrix_out(A, mb_matrix(A, b, A.parse(s), A.parse(t), A.parse(u), A.parse(v)));
    });
}
