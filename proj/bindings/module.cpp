#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qjalg/differential.hpp"
#include "qjalg/dimensions.hpp"
#include "qjalg/expr.hpp"
#include "qjalg/json_io.hpp"
#include "qjalg/series.hpp"
#include "qjalg/verify.hpp"

namespace py = pybind11;
using namespace qjalg;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational from_py(const py::handle& h)
{
    return parse_rational(py::str(h).cast<std::string>());
}

py::object big_to_py(const BigInt& n) { return py::int_(py::str(n.get_str())); }

QJForm coerce(const py::object& o)
{
    if (py::isinstance<QJForm>(o))
        return o.cast<QJForm>();
    if (py::isinstance<py::str>(o))
        return evaluate_form(o.cast<std::string>());
    return QJForm(from_py(o));
}

py::dict terms_dict(const QJForm& f)
{
    py::dict d;
    for (const auto& [m, c] : f.terms()) {
        py::tuple e(5);
        for (std::size_t i = 0; i < 5; ++i)
            e[i] = m.exponent(static_cast<Gen>(i));
        d[e] = to_fraction(c);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_qjalg, m)
{
    m.doc() = "Exact arithmetic for index-zero quasi-Jacobi forms";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    py::class_<QJForm>(m, "Form")
        .def(py::init([](const py::object& o) { return coerce(o); }), py::arg("value") = 0)
        .def_static("generator", [](const std::string& name) {
            for (Gen g : kAllGenerators)
                if (generator_name(g) == name)
                    return QJForm::generator(g);
            throw DomainError("unknown generator '" + name + "'");
        })
        .def("terms", &terms_dict, "{(a,b,c,d,e): Fraction} for wp^a dwp^b e4^c e1^d e2^e")
        .def("weight", &QJForm::homogeneous_weight)
        .def("depth", [](const QJForm& f) {
            const auto d = depth_of(f);
            return py::make_tuple(d.s1, d.s2);
        })
        .def("is_zero", &QJForm::is_zero)
        .def("to_json", [](const QJForm& f) { return form_to_json(f).dump(); })
        .def_static("from_json", [](const std::string& s) { return form_from_json(nlohmann::json::parse(s)); })
        .def("__add__", [](const QJForm& a, const py::object& b) { return a + coerce(b); })
        .def("__radd__", [](const QJForm& a, const py::object& b) { return coerce(b) + a; })
        .def("__sub__", [](const QJForm& a, const py::object& b) { return a - coerce(b); })
        .def("__rsub__", [](const QJForm& a, const py::object& b) { return coerce(b) - a; })
        .def("__mul__", [](const QJForm& a, const py::object& b) { return a * coerce(b); })
        .def("__rmul__", [](const QJForm& a, const py::object& b) { return coerce(b) * a; })
        .def("__pow__", [](const QJForm& a, unsigned n) { return pow(a, n); })
        .def("__neg__", [](const QJForm& a) { return -a; })
        .def("__eq__", [](const QJForm& a, const py::object& b) { return a == coerce(b); })
        .def("__hash__", [](const QJForm& f) { return py::hash(py::str(render(f))); })
        .def("__str__", [](const QJForm& f) { return render(f); })
        .def("__repr__", [](const QJForm& f) { return "Form('" + render(f) + "')"; });

    m.def("eval", [](const std::string& text) -> py::object {
        const Value v = evaluate(text);
        if (const auto* f = std::get_if<QJForm>(&v))
            return py::cast(*f);
        const auto& s = std::get<ScaledJForm>(v);
        return py::make_tuple(s.form, s.c_power);
    }, "Evaluate an expression; q(...) results come back as (form, c_power)");

    m.def("derive", [](const std::string& which, const py::object& f, unsigned times) {
        return derive_n(parse_derivation(which), coerce(f), times);
    }, py::arg("derivation"), py::arg("form"), py::arg("times") = 1);

    m.def("bracket", [](const std::string& kind, const py::object& f, const py::object& g, unsigned n) {
        return bracket(parse_bracket(kind), coerce(f), coerce(g), n);
    });

    m.def("transvectant_by_recurrence", [](const py::object& f, const py::object& g, unsigned n) {
        return transvectant_by_recurrence(coerce(f), coerce(g), n);
    });

    m.def("q_coefficient", [](const py::object& f, unsigned j1, unsigned j2) {
        const ScaledJForm s = q_coefficient(coerce(f), j1, j2);
        return py::make_tuple(s.form, s.c_power);
    });

    m.def("member", [](const std::string& algebra, const py::object& f) {
        return member(coerce(f), parse_algebra(algebra));
    });

    m.def("stability", [](const std::string& algebra, const std::string& derivation) -> py::object {
        const auto r = check_stability(parse_algebra(algebra), parse_derivation(derivation));
        return py::make_tuple(r.closed, r.witness ? py::cast(*r.witness) : py::none());
    });

    m.def("dim", [](const std::string& family, std::int64_t k) { return big_to_py(dim_closed(parse_family(family), k)); });
    m.def("dim_brute", [](const std::string& family, std::int64_t k) {
        return big_to_py(dim_brute(parse_family(family), k));
    });
    m.def("alcuin", [](std::int64_t n) { return big_to_py(alcuin(n)); });

    m.def("expand", [](const py::object& f, int q_prec, int u_max) {
        const BigradedSeries s = expand(coerce(f), q_prec, u_max);
        py::dict coeffs;
        for (int mq = 0; mq < s.q_prec(); ++mq)
            for (int n = s.u_val(); n <= s.u_max(); ++n)
                if (sgn(s.coeff(mq, n)) != 0)
                    coeffs[py::make_tuple(mq, n)] = to_fraction(s.coeff(mq, n));
        return coeffs;
    }, py::arg("form"), py::arg("q_prec") = 8, py::arg("u_max") = 16,
       "{(q-exponent, u-exponent): Fraction}; weight-k forms are divided by pi^k");

    m.def("eval_numeric", [](const py::object& f, std::complex<double> tau, std::complex<double> z, int q_prec,
                             int u_max) { return eval_numeric(coerce(f), tau, z, q_prec, u_max); },
          py::arg("form"), py::arg("tau"), py::arg("z"), py::arg("q_prec") = 12, py::arg("u_max") = 16);

    m.def("verify", [](const std::string& suite, std::uint64_t seed) {
        VerifyOptions o;
        o.seed = seed;
        py::list out;
        for (const auto& r : run_suite(suite, o))
            out.append(py::make_tuple(r.name, r.ok, r.detail));
        return out;
    }, py::arg("suite") = "all", py::arg("seed") = VerifyOptions{}.seed);

    m.def("bernoulli", [](unsigned n) { return to_fraction(bernoulli(n)); });
}
