#include "qgkit/braided.hpp"
#include "qgkit/envelope.hpp"
#include "qgkit/expr.hpp"
#include "qgkit/oscillator.hpp"
#include "qgkit/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qgkit;

namespace {

Rational rational_arg(const std::string& text) {
    return parse_rational_literal(text);
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::object: {
        py::dict d;
        for (const auto& [k, v] : j.items())
            d[py::str(k)] = json_to_py(v);
        return d;
    }
    case Json::value_t::array: {
        py::list l;
        for (const auto& v : j)
            l.append(json_to_py(v));
        return l;
    }
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
        return py::int_(j.get<long>());
    case Json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    default:
        return py::none();
    }
}

py::object report_to_py(const Report& rep) {
    return json_to_py(report_json(rep));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact workbench for braided binomial relation systems";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<math_error>(m, "MathError");
    py::register_exception<resource_error>(m, "ResourceError");

    m.def(
        "solve_omega",
        [](int n, const std::string& nu, int root_order) {
            RootOrder order(root_order);
            py::list out;
            for (const auto& t : solve_omega(n, rational_arg(nu), order)) {
                py::dict d;
                for (int flat = 0; flat < (1 << t.slots); ++flat)
                    if (!t.comps[size_t(flat)].is_zero())
                        d[py::str(OmegaTensor::index_word(flat, t.slots))] =
                            t.comps[size_t(flat)].str();
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("nu"), py::arg("root_order") = 6,
        "Kernel basis of the binomial stack as index-word dictionaries.");

    m.def(
        "default_nu",
        [](int n) { return default_nu(n).get_str(); }, py::arg("n"),
        "Normalization exponent at which the order-n kernel is nontrivial.");

    m.def(
        "scan_nu",
        [](int n, const std::vector<std::string>& grid, int root_order) {
            RootOrder order(root_order);
            std::vector<Rational> g;
            for (const auto& s : grid)
                g.push_back(rational_arg(s));
            py::list out;
            for (const auto& [nu, dim] : scan_normalizations(n, g, order))
                out.append(py::make_tuple(nu.get_str(), dim));
            return out;
        },
        py::arg("n"), py::arg("grid"), py::arg("root_order") = 6);

    m.def(
        "relations",
        [](int n, const std::string& family, py::object nu, int root_order) {
            RootOrder order(root_order);
            if (family != "E" && family != "F")
                throw input_error("family must be E or F");
            Rational exponent = nu.is_none() ? default_nu(n)
                                             : rational_arg(py::cast<std::string>(nu));
            GeneratorTable table(family == "E"
                                     ? std::vector<std::string>{"E1", "E2"}
                                     : std::vector<std::string>{"F1", "F2"});
            std::vector<std::string> out;
            for (const auto& w : solve_omega(n, exponent, order))
                out.push_back(print_ncpoly(
                    relations_from_omega(
                        w, family == "E" ? GeneratorFamily::E : GeneratorFamily::F,
                        table, family == "E" ? "E1" : "F1",
                        family == "E" ? "E2" : "F2"),
                    table));
            return out;
        },
        py::arg("n"), py::arg("family") = "E", py::arg("nu") = py::none(),
        py::arg("root_order") = 6);

    m.def(
        "check_ybe",
        [](const std::string& nu, int root_order) {
            return ybe_residual(r_matrix(rational_arg(nu), RootOrder(root_order)))
                .is_zero();
        },
        py::arg("nu"), py::arg("root_order") = 6);

    m.def(
        "check_hecke",
        [](const std::string& nu, int root_order) {
            return hecke_residual(r_matrix(rational_arg(nu), RootOrder(root_order)))
                .is_zero();
        },
        py::arg("nu"), py::arg("root_order") = 6);

    m.def(
        "check_bialgebra",
        [](const std::string& nu, int bound, int root_order) {
            return report_to_py(check_preset_bialgebra(rational_arg(nu), bound,
                                                       RootOrder(root_order)));
        },
        py::arg("nu") = "0", py::arg("bound") = 4, py::arg("root_order") = 6);

    m.def(
        "check_dependency",
        [](int n, int bound, int root_order) {
            return report_to_py(check_dependency(n, bound, RootOrder(root_order)));
        },
        py::arg("n"), py::arg("bound") = 7, py::arg("root_order") = 6);

    m.def(
        "verify_dj_image",
        [](int n, int bound, int root_order) {
            return report_to_py(verify_dj_image(n, bound, RootOrder(root_order)));
        },
        py::arg("n"), py::arg("bound") = 7, py::arg("root_order") = 6);

    m.def(
        "serre",
        [](const std::string& cartan, int root_order) {
            auto semi = cartan.find(';');
            if (semi == std::string::npos)
                throw input_error("cartan matrix must look like \"2,-1;-3,2\"");
            auto split = [](const std::string& s) {
                std::vector<int> out;
                std::string item;
                std::istringstream in(s);
                while (std::getline(in, item, ','))
                    out.push_back(std::stoi(item));
                return out;
            };
            auto r1 = split(cartan.substr(0, semi));
            auto r2 = split(cartan.substr(semi + 1));
            if (r1.size() != 2 || r2.size() != 2)
                throw input_error("cartan matrix needs four entries");
            CartanMatrix c(r1[0], r1[1], r2[0], r2[1]);
            GeneratorTable table({"x1", "x2"});
            std::vector<std::string> out;
            for (const auto& rel :
                 serre_relations(c, table, "x1", "x2", RootOrder(root_order)))
                out.push_back(print_ncpoly(rel, table));
            return out;
        },
        py::arg("cartan"), py::arg("root_order") = 6);

    m.def(
        "oscillator_constraints",
        [](int root_order) {
            RootOrder order(root_order);
            GeneratorTable coeff = coefficient_table();
            py::list out;
            for (const auto& c : covariance_constraints(
                     oscillator_relation(order), standard_coaction(order), order)) {
                py::dict d;
                d["oscillator_word"] = c.oscillator_word;
                d["constraint"] = print_ncpoly(c.poly, coeff);
                out.append(d);
            }
            return out;
        },
        py::arg("root_order") = 6);

    m.def(
        "oscillator_comodule",
        [](int root_order) {
            RootOrder order(root_order);
            Report com = check_comodule(standard_coaction(order),
                                        coefficient_delta(order),
                                        coefficient_counit(order), order);
            Report coa = check_coassociativity(coefficient_delta(order), order);
            for (auto& item : coa.items)
                com.items.push_back(item);
            return report_to_py(com);
        },
        py::arg("root_order") = 6);

    m.def(
        "oscillator_sl2",
        [](int bound, int root_order) {
            return report_to_py(verify_sl2_substitution(bound, RootOrder(root_order)));
        },
        py::arg("bound") = 6, py::arg("root_order") = 6);

    m.def(
        "member",
        [](const std::vector<std::string>& table_names, const std::string& relations,
           const std::string& expr, int bound, int root_order) {
            RootOrder order(root_order);
            GeneratorTable table(table_names);
            RelationSet rels = parse_relation_file(relations, table, order);
            RewriteSystem sys(table);
            sys.add_relations(rels);
            RewriteSystem completed = complete(std::move(sys), bound);
            NcPoly p = parse_expression(expr, table, order);
            switch (ideal_member_status(p, completed)) {
            case MemberStatus::member:
                return std::string("member");
            case MemberStatus::not_member:
                return std::string("not-member");
            default:
                return std::string("undecided-at-bound");
            }
        },
        py::arg("table"), py::arg("relations"), py::arg("expr"),
        py::arg("bound") = 6, py::arg("root_order") = 6,
        "Bounded ideal membership over a relation file (text form).");

    m.def(
        "normal_form_str",
        [](const std::vector<std::string>& table_names, const std::string& relations,
           const std::string& expr, int bound, int root_order) {
            RootOrder order(root_order);
            GeneratorTable table(table_names);
            RelationSet rels = parse_relation_file(relations, table, order);
            RewriteSystem sys(table);
            sys.add_relations(rels);
            RewriteSystem completed = complete(std::move(sys), bound);
            return print_ncpoly(normal_form(parse_expression(expr, table, order),
                                            completed),
                                table);
        },
        py::arg("table"), py::arg("relations"), py::arg("expr"),
        py::arg("bound") = 6, py::arg("root_order") = 6);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
