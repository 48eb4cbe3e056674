#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nabla/bvp.hpp"
#include "nabla/fraccalc.hpp"
#include "nabla/greens.hpp"
#include "nabla/ivp.hpp"
#include "nabla/monomial.hpp"
#include "nabla/oracle.hpp"

namespace py = pybind11;
using namespace nabla;

namespace {

py::array_t<double> to_array(std::span<const double> values) {
    py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
    std::copy(values.begin(), values.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const Matrix& m) {
    py::array_t<double> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
    }
    return out;
}

GhostClosure closure_from(const FracOperator& op, const py::object& ghost) {
    if (ghost.is_none()) return ZeroClosure{};
    if (py::isinstance<py::str>(ghost)) {
        const auto name = ghost.cast<std::string>();
        if (name == "zero") return ZeroClosure{};
        if (name == "natural") return NaturalClosure{homogeneous_basis(op, BasisKind::Analytic)};
        throw InvalidArgument("ghost must be None, 'zero', 'natural' or a list of values");
    }
    return ExplicitClosure{ghost.cast<std::vector<double>>()};
}

BasisKind basis_kind(const std::string& name) {
    if (name == "numeric") return BasisKind::Numeric;
    if (name == "analytic") return BasisKind::Analytic;
    throw InvalidArgument("basis must be 'numeric' or 'analytic'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nabla fractional difference operators, boundary value problems and Green's functions";

    auto error = py::register_exception<Error>(m, "NablaError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
    py::register_exception<NearSingular>(m, "NearSingular", error);
    py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator", error);
    py::register_exception<SingularSystem>(m, "SingularSystem", error);

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init([](double base, Offset lo, std::vector<double> values) {
                 if (values.empty()) throw InvalidArgument("values must not be empty");
                 const Offset hi = lo + static_cast<Offset>(values.size()) - 1;
                 return GridFunction(Grid(base, lo, hi), std::move(values));
             }),
             py::arg("base"), py::arg("lo"), py::arg("values"))
        .def_property_readonly("base", &GridFunction::base)
        .def_property_readonly("lo", &GridFunction::lo)
        .def_property_readonly("hi", &GridFunction::hi)
        .def_property_readonly("values", [](const GridFunction& f) { return to_array(f.values()); })
        .def_property_readonly("points", [](const GridFunction& f) {
            std::vector<double> pts;
            for (Offset k = f.lo(); k <= f.hi(); ++k) pts.push_back(f.grid().point(k));
            return to_array(pts);
        })
        .def("at", &GridFunction::at, py::arg("offset"))
        .def("__len__", &GridFunction::size)
        .def("__repr__", [](const GridFunction& f) {
            return "GridFunction(base=" + std::to_string(f.base()) + ", offsets " +
                   std::to_string(f.lo()) + ".." + std::to_string(f.hi()) + ")";
        });

    m.def("taylor_monomial", &taylor_monomial, py::arg("m"), py::arg("nu"),
          "H_nu(a + m, a) by the product form.");
    m.def("rising", &rising, py::arg("m"), py::arg("nu"));
    m.def("nabla", &nabla::nabla, py::arg("f"));
    m.def("frac_integral", &frac_integral, py::arg("f"), py::arg("base"), py::arg("nu"));
    m.def("rl_difference", &rl_difference, py::arg("f"), py::arg("base"), py::arg("nu"));
    m.def("caputo_difference", &caputo_difference, py::arg("f"), py::arg("base"), py::arg("nu"));

    py::class_<FracOperator>(m, "FracOperator")
        .def(py::init<double, double, Offset, const GridFunction&, const GridFunction&>(),
             py::arg("a"), py::arg("nu"), py::arg("b"), py::arg("p"), py::arg("q"))
        .def_static("with_constants", &FracOperator::with_constants, py::arg("a"), py::arg("nu"),
                    py::arg("b"), py::arg("p") = 1.0, py::arg("q") = 0.0)
        .def_property_readonly("a", &FracOperator::a)
        .def_property_readonly("nu", &FracOperator::nu)
        .def_property_readonly("order", &FracOperator::order)
        .def_property_readonly("b", &FracOperator::b);

    m.def("apply", &apply, py::arg("op"), py::arg("x"));
    m.def("solve_ivp",
          [](const FracOperator& op, const GridFunction& h, std::vector<double> initial,
             const py::object& ghost) {
              return solve_ivp(op, h, InitialConditions{std::move(initial), closure_from(op, ghost)});
          },
          py::arg("op"), py::arg("h"), py::arg("initial"), py::arg("ghost") = py::none());
    m.def("variation_of_constants",
          py::overload_cast<const FracOperator&, const GridFunction&>(&variation_of_constants),
          py::arg("op"), py::arg("h"));
    m.def("cauchy_matrix",
          [](const FracOperator& op) {
              const CauchyFunction x = cauchy_function(op);
              const Grid grid = op.extended_grid();
              Matrix table(grid.size(), static_cast<std::size_t>(x.s_hi() - x.s_lo() + 1));
              for (Offset t = grid.lo; t <= grid.hi; ++t) {
                  for (Offset s = x.s_lo(); s <= x.s_hi(); ++s) {
                      table(static_cast<std::size_t>(t - grid.lo), static_cast<std::size_t>(s - x.s_lo())) =
                          t < s - op.order() ? 0.0 : x(t, s);
                  }
              }
              return to_array(table);
          },
          py::arg("op"),
          "x(t, s) with rows t = a-N+1..b and columns s = a+N+1..b.");
    m.def("homogeneous_basis",
          [](const FracOperator& op, const std::string& kind) { return homogeneous_basis(op, basis_kind(kind)); },
          py::arg("op"), py::arg("kind") = "numeric");

    py::class_<BoundarySpec>(m, "BoundarySpec")
        .def(py::init<std::vector<std::vector<double>>, std::vector<double>, std::vector<double>, double>(),
             py::arg("alpha"), py::arg("left_values"), py::arg("beta"), py::arg("right_value"))
        .def_static("conjugate_21", &BoundarySpec::conjugate_21, py::arg("left") = 0.0,
                    py::arg("slope") = 0.0, py::arg("right") = 0.0)
        .def_property_readonly("order", &BoundarySpec::order)
        .def("homogeneous", &BoundarySpec::homogeneous);

    m.def("d_matrix",
          [](const FracOperator& op, const BoundarySpec& spec, const std::string& kind) {
              return to_array(assemble_d(homogeneous_basis(op, basis_kind(kind)), spec, op).entries);
          },
          py::arg("op"), py::arg("spec"), py::arg("basis") = "numeric");
    m.def("solve_bvp",
          [](const FracOperator& op, const GridFunction& h, const BoundarySpec& spec, const std::string& kind) {
              return solve_bvp(op, h, spec, homogeneous_basis(op, basis_kind(kind)));
          },
          py::arg("op"), py::arg("h"), py::arg("spec"), py::arg("basis") = "numeric");

    py::class_<GreensFunction>(m, "GreensFunction")
        .def_property_readonly("a", &GreensFunction::a)
        .def_property_readonly("b", &GreensFunction::b)
        .def_property_readonly("order", &GreensFunction::order)
        .def("__call__", &GreensFunction::operator(), py::arg("t"), py::arg("s"))
        .def("branch", [](const GreensFunction& g, Offset t, Offset s) {
            return std::string(branch_name(g.branch(t, s)));
        })
        .def("matrix", [](const GreensFunction& g) {
            Matrix table(static_cast<std::size_t>(g.t_hi() - g.t_lo() + 1),
                         static_cast<std::size_t>(g.s_hi() - g.s_lo() + 1));
            for (Offset t = g.t_lo(); t <= g.t_hi(); ++t) {
                for (Offset s = g.s_lo(); s <= g.s_hi(); ++s) {
                    table(static_cast<std::size_t>(t - g.t_lo()), static_cast<std::size_t>(s - g.s_lo())) = g(t, s);
                }
            }
            return to_array(table);
        });

    m.def("build_greens",
          [](const FracOperator& op, const BoundarySpec& spec, const std::string& kind) {
              return build_greens(op, spec, homogeneous_basis(op, basis_kind(kind)));
          },
          py::arg("op"), py::arg("spec"), py::arg("basis") = "numeric");
    m.def("conjugate_greens_closed_form", &conjugate_greens_closed_form, py::arg("a"), py::arg("b"),
          py::arg("nu"));
    m.def("greens_solve", &greens_solve, py::arg("g"), py::arg("h"));
    m.def("compare_greens", &compare_greens, py::arg("g1"), py::arg("g2"));

    m.def("residual", &oracle::residual, py::arg("op"), py::arg("x"), py::arg("h"));
    m.def("dense_solve_ivp",
          [](const FracOperator& op, const GridFunction& h, std::vector<double> initial, const py::object& ghost) {
              const InitialConditions ic{std::move(initial), closure_from(op, ghost)};
              return oracle::dense_solve(oracle::assemble(op, oracle::IvpProblem{ic}, h)).x;
          },
          py::arg("op"), py::arg("h"), py::arg("initial"), py::arg("ghost") = py::none());

#ifdef VERSION_INFO
#define NABLA_STRINGIFY(x) #x
#define NABLA_TOSTRING(x) NABLA_STRINGIFY(x)
    m.attr("__version__") = NABLA_TOSTRING(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
