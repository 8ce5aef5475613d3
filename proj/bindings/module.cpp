#include "classnum/arithmetic.hpp"
#include "classnum/bound.hpp"
#include "classnum/congruence.hpp"
#include "classnum/datasets.hpp"
#include "classnum/expression.hpp"
#include "classnum/towers.hpp"
#include "classnum/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

/* mpz_class <-> Python int, bridged through decimal strings. */
template <>
struct type_caster<mpz_class> {
public:
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) {
            PyErr_Clear();
            return false;
        }
        const char* text = PyUnicode_AsUTF8(s);
        bool ok = text != nullptr;
        if (ok) {
            try {
                value = mpz_class(text);
            } catch (...) {
                ok = false;
            }
        }
        Py_DECREF(s);
        if (!ok)
            PyErr_Clear();
        return ok;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle)
    {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

using namespace classnum;

RankData make_rank_data(const Integer& p, unsigned e_p, std::optional<unsigned> r_p)
{
    RankData rank;
    rank.p = p;
    rank.e_p = e_p;
    rank.r_p = r_p;
    return rank;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Congruence checks on prime factors of class numbers";

    py::register_exception<ParseError>(m, "ExpressionError", PyExc_ValueError);
    py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);

    /* arithmetic */
    m.def(
        "gcd", [](const Integer& a, const Integer& b) { return classnum::gcd(a, b); },
        py::arg("a"), py::arg("b"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "factor",
        [](const Integer& n) { return factor(n).entries(); },
        py::arg("n"), "Prime factorization as a list of (prime, exponent) pairs.");
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("mod_pow", &mod_pow, py::arg("base"), py::arg("exp"), py::arg("mod"));
    m.def("multiplicative_order", &multiplicative_order, py::arg("p"), py::arg("q"));
    m.def("odd_part", &odd_part, py::arg("n"));

    /* verdicts */
    py::enum_<VerdictKind>(m, "VerdictKind")
        .value("Witness", VerdictKind::Witness)
        .value("SubfieldDivisibility", VerdictKind::SubfieldDivisibility)
        .value("Inconclusive", VerdictKind::Inconclusive)
        .value("Violation", VerdictKind::Violation);

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly("kind", &Verdict::kind)
        .def_property_readonly("is_witness", &Verdict::is_witness)
        .def_property_readonly("is_violation", &Verdict::is_violation)
        .def_property_readonly("witness_prime",
                               [](const Verdict& v) -> std::optional<Integer> {
                                   if (!v.is_witness())
                                       return std::nullopt;
                                   return v.witness_prime();
                               })
        .def_property_readonly("message", &Verdict::message)
        .def("__eq__", [](const Verdict& a, const Verdict& b) { return a == b; })
        .def("__str__", [](const Verdict& v) { return to_string(v); })
        .def("__repr__", [](const Verdict& v) { return "<Verdict " + to_string(v) + ">"; });

    /* congruence checks */
    m.def("rank_product", &rank_product, py::arg("p"), py::arg("r"));
    m.def("coprimality_witness", &coprimality_witness, py::arg("p"), py::arg("r"),
          py::arg("n1"));
    m.def(
        "check_theorem1",
        [](const Integer& p, const Integer& n1, unsigned e_p, std::optional<unsigned> r_p,
           std::optional<Integer> subfield_h) {
            return check_theorem1(make_rank_data(p, e_p, r_p), n1, subfield_h);
        },
        py::arg("p"), py::arg("n1"), py::arg("e_p") = 1, py::arg("r_p") = std::nullopt,
        py::arg("subfield_h") = std::nullopt);
    m.def(
        "check_corollary_odd_degree",
        [](const Integer& p, const Integer& n, unsigned e_p, std::optional<unsigned> r_p) {
            return check_corollary_odd_degree(make_rank_data(p, e_p, r_p), n);
        },
        py::arg("p"), py::arg("n"), py::arg("e_p") = 1, py::arg("r_p") = std::nullopt);
    m.def(
        "check_geometric",
        [](const Integer& p, unsigned r_p, const Integer& q, unsigned degree,
           const Integer& discriminant) {
            BoundInput input{degree, discriminant};
            return check_geometric(p, r_p, q, class_number_bound(input));
        },
        py::arg("p"), py::arg("r_p"), py::arg("q"), py::arg("degree"),
        py::arg("discriminant"));
    m.def("solvable_prime_admissible", &solvable_prime_admissible, py::arg("p"),
          py::arg("relative_degree"));

    /* geometric bound */
    py::class_<BoundValue>(m, "BoundValue")
        .def_property_readonly("ceiling",
                               [](const BoundValue& b) { return b.integer_ceiling; })
        .def_readonly("degenerate", &BoundValue::degenerate)
        .def_property_readonly("value",
                               [](const BoundValue& b) { return b.real_value.to_double(); })
        .def(
            "decimal",
            [](const BoundValue& b, int digits) { return b.real_value.decimal(digits); },
            py::arg("digits") = 12)
        .def("__repr__", [](const BoundValue& b) {
            return "<BoundValue " + b.real_value.decimal(12) + ">";
        });
    m.def(
        "class_number_bound",
        [](unsigned degree, const Integer& discriminant, unsigned precision) {
            BoundInput input{degree, discriminant};
            return class_number_bound(input, static_cast<mpfr_prec_t>(precision));
        },
        py::arg("degree"), py::arg("discriminant"), py::arg("precision") = 128);
    m.def("exceeds_bound", &exceeds_bound, py::arg("p"), py::arg("bound"));

    /* expressions */
    py::class_<FactorExpression>(m, "FactorExpression")
        .def_readonly("source_text", &FactorExpression::source_text)
        .def_readonly("value", &FactorExpression::value)
        .def_readonly("is_plus_one_form", &FactorExpression::is_plus_one_form)
        .def_readonly("outer_exponent", &FactorExpression::outer_exponent)
        .def("__repr__", [](const FactorExpression& f) {
            return "<FactorExpression " + f.source_text + " = " + to_string(f.value) + ">";
        });
    m.def("parse_class_expression", &parse_class_expression, py::arg("text"));
    m.def("evaluate_expression", &evaluate_expression, py::arg("text"));

    /* towers and descent */
    py::enum_<StepOutcome>(m, "StepOutcome")
        .value("WitnessHere", StepOutcome::WitnessHere)
        .value("PushedDown", StepOutcome::PushedDown);

    py::class_<DescentStep>(m, "DescentStep")
        .def_readonly("q", &DescentStep::q)
        .def_readonly("order", &DescentStep::order)
        .def_readonly("outcome", &DescentStep::outcome);

    py::class_<DescentTrace>(m, "DescentTrace")
        .def_readonly("steps", &DescentTrace::steps)
        .def_readonly("final", &DescentTrace::final);

    py::class_<CyclicTower>(m, "CyclicTower")
        .def_property_readonly("base_degree",
                               [](const CyclicTower& t) { return t.base.degree; })
        .def_readonly("steps", &CyclicTower::steps)
        .def_property_readonly("top_degree",
                               [](const CyclicTower& t) { return t.top.degree; })
        .def("__repr__",
             [](const CyclicTower& t) { return "<CyclicTower " + tower_literal(t) + ">"; });
    m.def("make_tower", &make_tower, py::arg("base_degree"), py::arg("steps"));
    m.def(
        "validate_tower",
        [](const CyclicTower& tower) {
            std::string error;
            bool ok = validate_tower(tower, &error);
            return std::make_pair(ok, error);
        },
        py::arg("tower"));
    m.def("descend", &descend, py::arg("tower"), py::arg("p"), py::arg("r"));
    m.def("parse_tower_literal", &parse_tower_literal, py::arg("text"));
    m.def("tower_literal", &tower_literal, py::arg("tower"));

    /* datasets and verification */
    py::enum_<Family>(m, "Family")
        .value("CyclotomicMinus", Family::CyclotomicMinus)
        .value("CyclotomicReal", Family::CyclotomicReal)
        .value("CubicReal", Family::CubicReal)
        .value("RealCyclicSmallConductor", Family::RealCyclicSmallConductor)
        .value("Quintic", Family::Quintic)
        .value("Decimic", Family::Decimic)
        .value("Custom", Family::Custom)
        .def("__str__", [](Family f) { return to_string(f); });

    py::class_<SubfieldClassNumber>(m, "SubfieldClassNumber")
        .def_readonly("label", &SubfieldClassNumber::label)
        .def_readonly("value", &SubfieldClassNumber::value);

    py::class_<FieldRecord>(m, "FieldRecord")
        .def_readonly("family", &FieldRecord::family)
        .def_readonly("label", &FieldRecord::label)
        .def_readonly("conductor", &FieldRecord::conductor)
        .def_readonly("degree_N", &FieldRecord::degree_N)
        .def_readonly("odd_part_N1", &FieldRecord::odd_part_N1)
        .def_readonly("class_items", &FieldRecord::class_items)
        .def_readonly("class_total", &FieldRecord::class_total)
        .def_readonly("rank_annotations", &FieldRecord::rank_annotations)
        .def_readonly("subfields", &FieldRecord::subfields)
        .def_readonly("notes", &FieldRecord::notes)
        .def("__repr__", [](const FieldRecord& r) {
            return "<FieldRecord " + to_string(r.family) + " " + r.label + ">";
        });

    m.def(
        "parse_dataset",
        [](const std::string& text, const std::string& source) {
            return parse_dataset(text, source);
        },
        py::arg("text"), py::arg("source") = std::string("<string>"));
    m.def("serialize_record", &serialize_record, py::arg("record"));
    m.def("bundled_records", [](Family family) { return bundled_records(family); },
          py::arg("family"));
    m.def("all_bundled_records", &all_bundled_records);
    m.def("bundled_dataset_text", &bundled_dataset_text, py::arg("family"));

    py::class_<ReportRow>(m, "ReportRow")
        .def_readonly("family", &ReportRow::family)
        .def_readonly("label", &ReportRow::label)
        .def_readonly("p", &ReportRow::p)
        .def_readonly("e_p", &ReportRow::e_p)
        .def_readonly("r_used", &ReportRow::r_used)
        .def_readonly("rank_assumed", &ReportRow::rank_assumed)
        .def_readonly("rank_uncertain", &ReportRow::rank_uncertain)
        .def_readonly("verdict", &ReportRow::verdict)
        .def_readonly("witness", &ReportRow::witness)
        .def_readonly("subfield_checked", &ReportRow::subfield_checked)
        .def_readonly("subfield_confirmed", &ReportRow::subfield_confirmed)
        .def_readonly("corollary", &ReportRow::corollary)
        .def_readonly("geometric", &ReportRow::geometric)
        .def_readonly("geometric_q", &ReportRow::geometric_q);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("rows", &VerificationReport::rows)
        .def("count", &VerificationReport::count, py::arg("kind"))
        .def_property_readonly("has_violation", &VerificationReport::has_violation);

    m.def("verify_record", &verify_record, py::arg("record"));
    m.def("verify_records", &verify_records, py::arg("records"));
    m.def("report_tsv", &report_tsv, py::arg("report"));
    m.def("report_text", &report_text, py::arg("report"));
}
