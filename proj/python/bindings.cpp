#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "trigfund/approximants.hpp"
#include "trigfund/error.hpp"
#include "trigfund/grid.hpp"
#include "trigfund/kernels.hpp"
#include "trigfund/validation.hpp"

namespace py = pybind11;
using namespace trigfund;

namespace {

// Applies f elementwise over t; scalars in, scalar out.
template <class F>
py::object map_angles(py::array_t<double> t, F&& f) {
    return py::vectorize([&f](double x) -> double { return f(x); })(std::move(t));
}

py::array_t<double> gram_to_numpy(const GramMatrix& g) {
    py::array_t<double> out({g.size(), g.size()});
    auto view = out.mutable_unchecked<2>();
    for (int i = 1; i <= g.size(); ++i) {
        for (int j = 1; j <= g.size(); ++j) {
            view(i - 1, j - 1) = g(i, j);
        }
    }
    return out;
}

std::string basis_repr(const BasisSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, InterpPoly>) {
                return "InterpPoly()";
            } else if constexpr (std::is_same_v<T, InterpSpline>) {
                return "InterpSpline(r=" + std::to_string(s.shape.r) + ", truncation=" +
                       std::to_string(s.shape.truncation) + ")";
            } else if constexpr (std::is_same_v<T, LSPoly>) {
                return "LSPoly(q=" + std::to_string(s.q) + ")";
            } else {
                return "LSSpline(q=" + std::to_string(s.q) + ", r=" + std::to_string(s.shape.r) +
                       ", truncation=" + std::to_string(s.shape.truncation) + ")";
            }
        },
        spec);
}

} // namespace

PYBIND11_MODULE(_trigfund, m) {
    m.doc() = "Fundamental trigonometric polynomials and splines on uniform grids";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_storage;
    error_storage.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "TrigfundError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            const py::object& type = error_storage.get_stored();
            py::object exc = type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::enum_<GridKind>(m, "GridKind")
        .value("Type0", GridKind::Type0)
        .value("Type1", GridKind::Type1);

    py::class_<UniformGrid>(m, "UniformGrid")
        .def(py::init<GridKind, int>(), py::arg("kind"), py::arg("n_nodes"))
        .def_property_readonly("kind", &UniformGrid::kind)
        .def_property_readonly("size", &UniformGrid::size)
        .def_property_readonly("harmonic_order", &UniformGrid::harmonic_order)
        .def_property_readonly("spacing", &UniformGrid::spacing)
        .def_property_readonly("nodes",
                               [](const UniformGrid& g) {
                                   return py::array_t<double>(g.size(), g.nodes().data());
                               })
        .def("node", &UniformGrid::node, py::arg("j"), "Node t_j, 1-based")
        .def("__len__", &UniformGrid::size)
        .def("__eq__", [](const UniformGrid& a, const UniformGrid& b) { return a == b; })
        .def("__repr__", [](const UniformGrid& g) {
            return "UniformGrid(" + std::string(g.kind() == GridKind::Type0 ? "Type0" : "Type1") + ", " +
                   std::to_string(g.size()) + ")";
        });

    m.def("make_grid", &make_grid, py::arg("kind"), py::arg("n_nodes"));
    m.def("wrap_angle", py::vectorize(&wrap_angle), py::arg("t"));

    py::class_<SplineShape>(m, "SplineShape")
        .def(py::init([](int r, int truncation) {
                 SplineShape s{r, truncation};
                 s.validate();
                 return s;
             }),
             py::arg("r") = 1, py::arg("truncation") = kDefaultTruncation)
        .def_readonly("r", &SplineShape::r)
        .def_readonly("truncation", &SplineShape::truncation)
        .def("__repr__", [](const SplineShape& s) {
            return "SplineShape(r=" + std::to_string(s.r) + ", truncation=" + std::to_string(s.truncation) + ")";
        });

    m.def(
        "tm_eval",
        [](const UniformGrid& g, int k, py::array_t<double> t) {
            return map_angles(std::move(t), [&](double x) { return tm_eval(g, k, x); });
        },
        py::arg("grid"), py::arg("k"), py::arg("t"));
    m.def(
        "phi_ls_eval",
        [](const UniformGrid& g, int j, int q, py::array_t<double> t) {
            check_budget(g, q);
            return map_angles(std::move(t), [&](double x) { return phi_ls_eval(g, j, q, x); });
        },
        py::arg("grid"), py::arg("j"), py::arg("q"), py::arg("t"));
    m.def("sigma_factor", py::vectorize(&sigma_factor), py::arg("k"), py::arg("r"), py::arg("n_nodes"));
    m.def("series_C", &series_C, py::arg("grid"), py::arg("k"), py::arg("shape"), py::arg("j"), py::arg("t"));
    m.def("series_H", &series_H, py::arg("kind"), py::arg("k"), py::arg("shape"), py::arg("n_nodes"));

    py::class_<SplineKernel>(m, "SplineKernel")
        .def(py::init<UniformGrid, SplineShape>(), py::arg("grid"), py::arg("shape"))
        .def("__call__",
             [](const SplineKernel& k, int j, int q, py::array_t<double> t) {
                 return map_angles(std::move(t), [&](double x) { return k(j, q, x); });
             },
             py::arg("j"), py::arg("q"), py::arg("t"));

    m.def(
        "ts_eval",
        [](const UniformGrid& g, int j, const SplineShape& shape, py::array_t<double> t) {
            const SplineKernel kernel(g, shape);
            return map_angles(std::move(t), [&](double x) { return kernel(j, g.harmonic_order(), x); });
        },
        py::arg("grid"), py::arg("j"), py::arg("shape"), py::arg("t"));
    m.def(
        "ts_ls_eval",
        [](const UniformGrid& g, int j, int q, const SplineShape& shape, py::array_t<double> t) {
            check_budget(g, q);
            const SplineKernel kernel(g, shape);
            return map_angles(std::move(t), [&](double x) { return kernel(j, q, x); });
        },
        py::arg("grid"), py::arg("j"), py::arg("q"), py::arg("shape"), py::arg("t"));

    py::class_<InterpPoly>(m, "InterpPoly")
        .def(py::init<>())
        .def("__repr__", [](const InterpPoly& s) { return basis_repr(s); });
    py::class_<InterpSpline>(m, "InterpSpline")
        .def(py::init<SplineShape>(), py::arg("shape"))
        .def_readonly("shape", &InterpSpline::shape)
        .def("__repr__", [](const InterpSpline& s) { return basis_repr(s); });
    py::class_<LSPoly>(m, "LSPoly")
        .def(py::init<int>(), py::arg("q"))
        .def_readonly("q", &LSPoly::q)
        .def("__repr__", [](const LSPoly& s) { return basis_repr(s); });
    py::class_<LSSpline>(m, "LSSpline")
        .def(py::init<int, SplineShape>(), py::arg("q"), py::arg("shape"))
        .def_readonly("q", &LSSpline::q)
        .def_readonly("shape", &LSSpline::shape)
        .def("__repr__", [](const LSSpline& s) { return basis_repr(s); });

    py::class_<SampleSet>(m, "SampleSet")
        .def(py::init<UniformGrid, std::vector<double>>(), py::arg("grid"), py::arg("values"))
        .def_static(
            "from_function",
            [](const UniformGrid& g, const py::function& f) {
                return SampleSet::from_function(g, [&](double t) { return f(t).cast<double>(); });
            },
            py::arg("grid"), py::arg("f"))
        .def_property_readonly("grid", &SampleSet::grid)
        .def_property_readonly("values", [](const SampleSet& s) {
            return py::array_t<double>(static_cast<py::ssize_t>(s.values().size()), s.values().data());
        });

    py::class_<FourierCoeffs>(m, "FourierCoeffs")
        .def_readonly("a0", &FourierCoeffs::a0)
        .def_readonly("a", &FourierCoeffs::a)
        .def_readonly("b", &FourierCoeffs::b)
        .def_property_readonly("order", &FourierCoeffs::order);

    py::class_<Approximant>(m, "Approximant")
        .def_property_readonly("samples", &Approximant::samples)
        .def_property_readonly("grid", &Approximant::grid)
        .def("__call__",
             [](const Approximant& a, py::array_t<double> t) {
                 return map_angles(std::move(t), [&](double x) { return a.evaluate(x); });
             },
             py::arg("t"))
        .def("evaluate",
             [](const Approximant& a, py::array_t<double> t) {
                 return map_angles(std::move(t), [&](double x) { return a.evaluate(x); });
             },
             py::arg("t"));

    m.def("build", &build, py::arg("samples"), py::arg("basis"));
    m.def("fourier_coeffs", &fourier_coeffs, py::arg("samples"));
    m.def(
        "partial_sum_eval",
        [](const FourierCoeffs& c, int q, py::array_t<double> t) {
            return map_angles(std::move(t), [&](double x) { return partial_sum_eval(c, q, x); });
        },
        py::arg("coeffs"), py::arg("q"), py::arg("t"));
    m.def("residual_sse", &residual_sse, py::arg("samples"), py::arg("approx"));

    m.def(
        "continuous_gram",
        [](const UniformGrid& g, const BasisSpec& b, int points) { return gram_to_numpy(continuous_gram(g, b, points)); },
        py::arg("grid"), py::arg("basis"), py::arg("num_points") = kDefaultQuadraturePoints);
    m.def(
        "discrete_gram", [](const UniformGrid& g, const BasisSpec& b) { return gram_to_numpy(discrete_gram(g, b)); },
        py::arg("grid"), py::arg("basis"));
    m.def(
        "periodic_quadrature",
        [](const py::function& f, int points) {
            return periodic_quadrature([&](double t) { return f(t).cast<double>(); }, points);
        },
        py::arg("f"), py::arg("num_points"));
    m.def("ls_oracle", &ls_oracle, py::arg("samples"), py::arg("q"));
    m.def(
        "collinearity_defect",
        [](const UniformGrid& g, int j, const SplineShape& shape, int interval) {
            return collinearity_defect(g, j, shape, interval);
        },
        py::arg("grid"), py::arg("j"), py::arg("shape"), py::arg("interval"));
}
