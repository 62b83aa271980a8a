#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cwpair/casson.hpp"
#include "cwpair/dedekind.hpp"
#include "cwpair/errors.hpp"
#include "cwpair/knot.hpp"
#include "cwpair/lift.hpp"
#include "cwpair/matrix.hpp"
#include "cwpair/slopes.hpp"
#include "cwpair/sympoly.hpp"

namespace py = pybind11;
using namespace cwpair;

namespace {

py::int_ to_py_int(const Int& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Int to_int(const py::object& o) {
    return Int(py::str(o).cast<std::string>(), 10);
}

IntMatrix to_int_matrix(const std::vector<std::vector<py::object>>& rows) {
    const size_t nrows = rows.size();
    const size_t ncols = nrows == 0 ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DomainError("matrix rows must have equal length");
    }
    IntMatrix m(nrows, ncols);
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < ncols; ++j) m(i, j) = to_int(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<py::int_>> from_int_matrix(const IntMatrix& m) {
    std::vector<std::vector<py::int_>> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) rows[i].push_back(to_py_int(m(i, j)));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Casson-Walker invariants of cyclic covering-space pairs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& o) {
                 if (py::isinstance<py::int_>(o)) return Rational(to_int(o));
                 return Rational::parse(o.cast<std::string>());
             }),
             "from an int or an 'a/b' string")
        .def(py::init([](const py::object& n, const py::object& d) {
            return Rational(to_int(n), to_int(d));
        }))
        .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.num()); })
        .def_property_readonly("denominator", [](const Rational& r) { return to_py_int(r.den()); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__float__", &Rational::to_double)
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("floor", [](const Rational& r) { return to_py_int(r.floor()); })
        .def("pow", &Rational::pow);
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    m.def("sawtooth", &sawtooth, "sawtooth ((z)): 0 on integers, else z - floor(z) - 1/2");
    m.def(
        "dedekind_paper",
        [](const py::object& x, const py::object& y) { return dedekind_paper(to_int(x), to_int(y)); },
        "Dedekind sum summed to |x| (as printed in the source material)");
    m.def(
        "dedekind_standard",
        [](const py::object& x, const py::object& y) {
            return dedekind_standard(to_int(x), to_int(y));
        },
        "classical Dedekind sum (summed to |y|); the form used by the surgery formulas");

    py::class_<SymPoly>(m, "SymPoly")
        .def(py::init([](const std::string& text) { return SymPoly::parse(text); }))
        .def_static("parse", [](const std::string& text) { return SymPoly::parse(text); })
        .def("str", &SymPoly::str, py::arg("var") = "t", py::arg("spaces") = true)
        .def("__str__", [](const SymPoly& p) { return p.str(); })
        .def("__repr__", [](const SymPoly& p) { return "SymPoly('" + p.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("coeffs", [](const SymPoly& p) { return p.coeffs(); },
             "half-step exponent -> coefficient (key e stands for t^(e/2))")
        .def("evaluate", &SymPoly::evaluate)
        .def("value_at_one", &SymPoly::value_at_one)
        .def("is_symmetric", &SymPoly::is_symmetric)
        .def("is_normalized", &SymPoly::is_normalized)
        .def("normalized", &SymPoly::normalized)
        .def("second_derivative_at_one", &SymPoly::second_derivative_at_one);
    py::implicitly_convertible<py::str, SymPoly>();

    m.def("unit_equivalent", &unit_equivalent,
          "whether the polynomials agree up to a unit c * t^k");
    m.def("cyclotomic_lift", &cyclotomic_lift, py::arg("delta"), py::arg("k"),
          "Alexander polynomial of the lifted knot in the k-fold branched cover");
    m.def("lift_paper_eq10", &lift_paper_eq10, py::arg("delta"), py::arg("k"),
          "the odd-k coefficient-power shortcut (diverges from cyclotomic_lift in general)");

    m.def(
        "alexander_from_seifert",
        [](const std::vector<std::vector<py::object>>& rows) {
            return alexander_from_seifert(to_int_matrix(rows));
        },
        "normalized det(V - t V^T) of a Seifert matrix");
    m.def(
        "companion_alexander",
        [](const SymPoly& p) { return companion_alexander(p); },
        "det(A - tI) for the companion matrix A of a monic integer polynomial");

    py::class_<KnotRecord>(m, "KnotRecord")
        .def_readonly("name", &KnotRecord::name)
        .def_readonly("alexander", &KnotRecord::alexander)
        .def_property_readonly("seifert",
                               [](const KnotRecord& r) -> py::object {
                                   if (!r.seifert) return py::none();
                                   return py::cast(from_int_matrix(*r.seifert));
                               })
        .def_readonly("branched_cover_lambda", &KnotRecord::branched_cover_lambda)
        .def("__repr__", [](const KnotRecord& r) { return "KnotRecord('" + r.name + "')"; });

    m.def("load_catalog",
          [](const std::string& text) { return load_catalog(text); },
          "parse a knot catalog");
    m.def("builtin_catalog", [] { return builtin_catalog(); });
    m.def("find_knot",
          [](const std::string& name) { return find_knot(builtin_catalog(), name); },
          "look up a built-in knot by name");

    m.def(
        "lambda_surgery_s3",
        [](const SymPoly& delta, const py::object& a, const py::object& b) {
            return lambda_surgery_s3(delta, to_int(a), to_int(b));
        },
        py::arg("delta"), py::arg("a"), py::arg("b"),
        "Casson-Walker invariant of a/b-surgery on a knot in S^3");
    m.def(
        "lambda_cover_surgery",
        [](const SymPoly& lift, const py::object& p, const py::object& q, const Rational& lam) {
            return lambda_cover_surgery(lift, to_int(p), to_int(q), lam);
        },
        py::arg("delta_lift"), py::arg("p"), py::arg("q"), py::arg("lambda_branched"),
        "Casson-Walker invariant of p/q-surgery on the lifted knot");
    m.def("lambda_replication", &lambda_replication, py::arg("lambda_x"), py::arg("lambda_n"),
          py::arg("k"), py::arg("lambda_n_tilde"));

    py::class_<LambdaPairResult>(m, "LambdaPairResult")
        .def_readonly("value", &LambdaPairResult::value)
        .def_readonly("branched_resolved", &LambdaPairResult::branched_resolved)
        .def("__str__", &LambdaPairResult::str)
        .def("__repr__", [](const LambdaPairResult& r) {
            return "LambdaPairResult('" + r.str() + "')";
        });

    py::class_<PairDescription>(m, "PairDescription")
        .def(py::init([](const KnotRecord& knot, long k, const py::object& p, const py::object& q,
                         std::vector<int> link_coefficients, std::optional<Rational> lambda_x,
                         std::optional<Rational> lambda_branched) {
                 PairDescription d;
                 d.knot = knot;
                 d.k = k;
                 d.p = to_int(p);
                 d.q = to_int(q);
                 d.link_coefficients = std::move(link_coefficients);
                 d.lambda_x = std::move(lambda_x);
                 d.lambda_branched = std::move(lambda_branched);
                 return d;
             }),
             py::arg("knot"), py::arg("k"), py::arg("p"), py::arg("q"),
             py::arg("link_coefficients") = std::vector<int>{},
             py::arg("lambda_x") = std::nullopt, py::arg("lambda_branched") = std::nullopt)
        .def("validate", &PairDescription::validate);

    m.def("lambda_pair", &lambda_pair, "the pair surgery formula for the cover invariant");

    py::class_<Slope>(m, "Slope")
        .def(py::init([](const std::string& text) { return Slope::parse(text); }))
        .def(py::init([](const py::object& p, const py::object& q) {
            return Slope(to_int(p), to_int(q));
        }))
        .def_property_readonly("numerator", [](const Slope& s) { return to_py_int(s.num()); })
        .def_property_readonly("denominator", [](const Slope& s) { return to_py_int(s.den()); })
        .def("is_meridian", &Slope::is_meridian)
        .def("__str__", &Slope::str)
        .def("__repr__", [](const Slope& s) { return "Slope('" + s.str() + "')"; })
        .def(py::self == py::self);
    py::implicitly_convertible<py::str, Slope>();

    m.def("distance", [](const Slope& a, const Slope& b) { return to_py_int(distance(a, b)); },
          "geometric intersection number of two slopes");

    py::class_<CoverSlope>(m, "CoverSlope")
        .def_readonly("slope", &CoverSlope::slope)
        .def_readonly("cyclic_caveat", &CoverSlope::cyclic_caveat)
        .def("__repr__", [](const CoverSlope& c) {
            return "CoverSlope('" + c.slope.str() + "', caveat=" +
                   (c.cyclic_caveat ? "True" : "False") + ")";
        });
    m.def("cover_slope", &cover_slope, py::arg("base"), py::arg("k"),
          "slope of the lifted knot for a base slope (kp)/q");

    py::class_<DivisorEntry>(m, "DivisorEntry")
        .def_property_readonly("cover_order",
                               [](const DivisorEntry& e) { return to_py_int(e.cover_order); })
        .def_readonly("slope", &DivisorEntry::slope)
        .def_readonly("trivial", &DivisorEntry::trivial)
        .def("__repr__", [](const DivisorEntry& e) {
            return "DivisorEntry(cover=" + e.cover_order.get_str() + ", slope='" + e.slope.str() +
                   "')";
        });
    m.def("divisor_family", &divisor_family,
          "all cover-order/slope rows induced by one positive slope");

    py::enum_<SlopeKind>(m, "SlopeKind")
        .value("finite", SlopeKind::finite)
        .value("cyclic", SlopeKind::cyclic);

    py::class_<SlopeClaim>(m, "SlopeClaim")
        .def(py::init([](const Slope& slope, SlopeKind kind, long cover_order) {
                 return SlopeClaim{slope, kind, cover_order};
             }),
             py::arg("slope"), py::arg("kind"), py::arg("cover_order"))
        .def_readonly("slope", &SlopeClaim::slope)
        .def_readonly("kind", &SlopeClaim::kind)
        .def_readonly("cover_order", &SlopeClaim::cover_order);

    py::class_<GeomFlags>(m, "GeomFlags")
        .def(py::init([](bool irreducible, bool not_seifert_fibered,
                         bool not_cable_on_twisted_I_bundle, bool hyperbolic) {
                 return GeomFlags{irreducible, not_seifert_fibered, not_cable_on_twisted_I_bundle,
                                  hyperbolic};
             }),
             py::arg("irreducible") = false, py::arg("not_seifert_fibered") = false,
             py::arg("not_cable_on_twisted_I_bundle") = false, py::arg("hyperbolic") = false)
        .def_readwrite("irreducible", &GeomFlags::irreducible)
        .def_readwrite("not_seifert_fibered", &GeomFlags::not_seifert_fibered)
        .def_readwrite("not_cable_on_twisted_I_bundle", &GeomFlags::not_cable_on_twisted_I_bundle)
        .def_readwrite("hyperbolic", &GeomFlags::hyperbolic);

    py::class_<SlopeViolation>(m, "SlopeViolation")
        .def_readonly("rule", &SlopeViolation::rule)
        .def_readonly("slopes", &SlopeViolation::slopes)
        .def_property_readonly("distance",
                               [](const SlopeViolation& v) { return to_py_int(v.dist); })
        .def_readonly("bound", &SlopeViolation::bound)
        .def_readonly("hypotheses", &SlopeViolation::hypotheses)
        .def("__str__", &SlopeViolation::str);

    py::class_<SlopeReport>(m, "SlopeReport")
        .def_readonly("applied", &SlopeReport::applied)
        .def_readonly("violations", &SlopeReport::violations)
        .def("consistent", &SlopeReport::consistent);

    m.def("check_slope_bounds", &check_slope_bounds, py::arg("claims"), py::arg("k"),
          py::arg("flags"),
          "check claimed finite/cyclic slopes against the covering-space distance bounds");
}
