#include "qgkit/braided.hpp"
#include "qgkit/envelope.hpp"
#include "qgkit/expr.hpp"
#include "qgkit/oscillator.hpp"
#include "qgkit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace qgkit;

namespace {

struct Config {
    int root_order = 6;
    int degree_bound = 6;
    std::vector<Rational> nu_grid; // default k/6 for k in -12..12
    std::string format = "json";
    int max_rules = 4096;

    Config() {
        for (int k = -12; k <= 12; ++k)
            nu_grid.push_back(make_rational(k, 6));
    }
};

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(parse_rational_literal(item));
    if (out.empty())
        throw input_error("empty grid");
    return out;
}

void load_config(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank)
                continue;
            throw input_error("bad config line " + std::to_string(lineno));
        }
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "root_order")
            cfg.root_order = std::stoi(value);
        else if (key == "degree_bound")
            cfg.degree_bound = std::stoi(value);
        else if (key == "nu_grid")
            cfg.nu_grid = parse_grid(value);
        else if (key == "output")
            cfg.format = value;
        else if (key == "max_rules")
            cfg.max_rules = std::stoi(value);
        else
            throw input_error("unknown config key '" + key + "'");
    }
    if (cfg.root_order < 1 || cfg.degree_bound < 2)
        throw input_error("config out of range: root_order >= 1, degree_bound >= 2");
}

Json omega_json(const OmegaTensor& t) {
    Json obj = Json::object();
    for (int flat = 0; flat < (1 << t.slots); ++flat)
        if (!t.comps[size_t(flat)].is_zero())
            obj[OmegaTensor::index_word(flat, t.slots)] = t.comps[size_t(flat)].str();
    return obj;
}

struct Emitter {
    Config cfg;
    std::string command;
    Json inputs = Json::object();

    int emit(const Report& rep) {
        if (cfg.format == "text") {
            std::cout << "command: " << command << "\n" << report_text(rep);
        } else {
            Json out;
            out["schema"] = 1;
            out["command"] = command;
            out["inputs"] = inputs;
            Json body = report_json(rep);
            out["checks"] = body["checks"];
            if (body.contains("payload"))
                out["payload"] = body["payload"];
            out["status"] = rep.all_pass() ? "pass" : "fail-or-undecided";
            std::cout << out.dump(2) << "\n";
        }
        return rep.all_pass() ? 0 : 1;
    }

    int emit_payload(const Json& payload, bool pass = true,
                     const std::string& note = "") {
        if (cfg.format == "text") {
            std::cout << "command: " << command << "\n"
                      << payload.dump(2) << "\n";
            if (!note.empty())
                std::cout << note << "\n";
        } else {
            Json out;
            out["schema"] = 1;
            out["command"] = command;
            out["inputs"] = inputs;
            out["payload"] = payload;
            out["status"] = pass ? "pass" : "fail-or-undecided";
            std::cout << out.dump(2) << "\n";
        }
        return pass ? 0 : 1;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for braided binomial relation systems"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("QGKIT_ROOT_ORDER"))
        cfg.root_order = std::atoi(env);
    std::string config_path, format;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--format", format, "output format: json or text");
    int root_order_flag = 0;
    app.add_option("-m,--root-order", root_order_flag,
                   "root order of the deformation variable");

    // omega
    auto* omega_cmd = app.add_subcommand("omega", "kernel basis of the binomial stack");
    int omega_n = 2;
    std::string omega_nu;
    omega_cmd->add_option("--n", omega_n, "relation order")->required();
    omega_cmd->add_option("--nu", omega_nu, "normalization exponent p/r");

    // scan-nu
    auto* scan_cmd = app.add_subcommand("scan-nu", "kernel dimension per normalization");
    int scan_n = 2;
    std::string scan_grid;
    scan_cmd->add_option("--n", scan_n, "relation order")->required();
    scan_cmd->add_option("--grid", scan_grid, "comma-separated exponents");

    // relations
    auto* rel_cmd = app.add_subcommand("relations", "emitted relations for a family");
    int rel_n = 2;
    std::string rel_family = "E", rel_nu;
    rel_cmd->add_option("--n", rel_n, "relation order")->required();
    rel_cmd->add_option("--family", rel_family, "E or F");
    rel_cmd->add_option("--nu", rel_nu, "normalization exponent p/r");

    // check
    auto* check_cmd = app.add_subcommand("check", "verification suites");
    check_cmd->require_subcommand(1);
    auto* ybe_cmd = check_cmd->add_subcommand("ybe", "Yang-Baxter identity");
    std::string ybe_nu;
    ybe_cmd->add_option("--nu", ybe_nu, "normalization exponent (default: all presets)");
    auto* hecke_cmd = check_cmd->add_subcommand("hecke", "quadratic braid identity");
    std::string hecke_nu;
    hecke_cmd->add_option("--nu", hecke_nu, "normalization exponent");
    auto* bial_cmd = check_cmd->add_subcommand("bialgebra", "coproduct compatibility");
    std::string bial_nu = "0";
    int bial_bound = 4;
    bial_cmd->add_option("--nu", bial_nu, "normalization exponent");
    bial_cmd->add_option("--bound", bial_bound, "completion degree bound");
    auto* dep_cmd = check_cmd->add_subcommand("dependency", "order-N relation dependency");
    int dep_n = 3, dep_bound = 0;
    dep_cmd->add_option("--n", dep_n, "relation order")->required();
    dep_cmd->add_option("--bound", dep_bound, "completion degree bound");
    auto* dj_cmd = check_cmd->add_subcommand("dj-image", "enveloping-algebra image");
    int dj_n = 2, dj_bound = 0;
    dj_cmd->add_option("--n", dj_n, "relation order")->required();
    dj_cmd->add_option("--bound", dj_bound, "completion degree bound");

    // serre
    auto* serre_cmd = app.add_subcommand("serre", "q-Serre relations of a Cartan matrix");
    std::string serre_cartan = "2,-1;-1,2";
    serre_cmd->add_option("--cartan", serre_cartan, "matrix as \"a11,a12;a21,a22\"");

    // oscillator
    auto* osc_cmd = app.add_subcommand("oscillator", "covariant comodule checks");
    osc_cmd->require_subcommand(1);
    auto* osc_con = osc_cmd->add_subcommand("constraints", "covariance constraints");
    auto* osc_com = osc_cmd->add_subcommand("comodule", "comodule and counit axioms");
    auto* osc_sl2 = osc_cmd->add_subcommand("sl2", "rank-one substitution");
    int sl2_bound = 6;
    osc_sl2->add_option("--bound", sl2_bound, "completion degree bound");

    // member
    auto* member_cmd = app.add_subcommand("member", "bounded ideal membership");
    std::string member_table, member_file, member_expr;
    int member_bound = 0;
    member_cmd->add_option("--table", member_table, "comma-separated generators")->required();
    member_cmd->add_option("--relations", member_file, "relation file")->required();
    member_cmd->add_option("--expr", member_expr, "polynomial to test")->required();
    member_cmd->add_option("--bound", member_bound, "completion degree bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (!config_path.empty())
            load_config(cfg, config_path);
        if (!format.empty())
            cfg.format = format;
        if (root_order_flag > 0)
            cfg.root_order = root_order_flag;
        if (cfg.format != "json" && cfg.format != "text")
            throw input_error("format must be json or text");
        RootOrder order(cfg.root_order);
        CompletionOptions opts;
        opts.max_rules = cfg.max_rules;
        Emitter em{cfg, "", Json::object()};

        if (*omega_cmd) {
            em.command = "omega";
            Rational nu = omega_nu.empty() ? default_nu(omega_n)
                                           : parse_rational_literal(omega_nu);
            em.inputs["n"] = omega_n;
            em.inputs["nu"] = nu.get_str();
            em.inputs["root_order"] = cfg.root_order;
            auto basis = solve_omega(omega_n, nu, order);
            Json payload;
            payload["dimension"] = basis.size();
            Json vectors = Json::array();
            for (const auto& t : basis)
                vectors.push_back(omega_json(t));
            payload["kernel"] = std::move(vectors);
            return em.emit_payload(payload);
        }
        if (*scan_cmd) {
            em.command = "scan-nu";
            std::vector<Rational> grid =
                scan_grid.empty() ? cfg.nu_grid : parse_grid(scan_grid);
            em.inputs["n"] = scan_n;
            em.inputs["root_order"] = cfg.root_order;
            Json payload = Json::array();
            for (auto& [nu, dim] : scan_normalizations(scan_n, grid, order)) {
                Json row;
                row["nu"] = nu.get_str();
                row["dimension"] = dim;
                payload.push_back(std::move(row));
            }
            return em.emit_payload(payload);
        }
        if (*rel_cmd) {
            em.command = "relations";
            if (rel_family != "E" && rel_family != "F")
                throw input_error("family must be E or F");
            Rational nu = rel_nu.empty() ? default_nu(rel_n)
                                         : parse_rational_literal(rel_nu);
            em.inputs["n"] = rel_n;
            em.inputs["family"] = rel_family;
            em.inputs["nu"] = nu.get_str();
            GeneratorTable table(rel_family == "E"
                                     ? std::vector<std::string>{"E1", "E2"}
                                     : std::vector<std::string>{"F1", "F2"});
            Json payload = Json::array();
            for (const auto& w : solve_omega(rel_n, nu, order)) {
                NcPoly rel = relations_from_omega(
                    w,
                    rel_family == "E" ? GeneratorFamily::E : GeneratorFamily::F,
                    table, rel_family == "E" ? "E1" : "F1",
                    rel_family == "E" ? "E2" : "F2");
                payload.push_back(print_ncpoly(rel, table));
            }
            return em.emit_payload(payload);
        }
        if (*ybe_cmd || *hecke_cmd) {
            bool ybe = bool(*ybe_cmd);
            em.command = ybe ? "check ybe" : "check hecke";
            const std::string& nu_text = ybe ? ybe_nu : hecke_nu;
            std::vector<Rational> nus;
            if (nu_text.empty()) {
                nus = {make_rational(1), make_rational(0), make_rational(-1, 3)};
            } else {
                nus = {parse_rational_literal(nu_text)};
            }
            Report rep;
            rep.title = em.command;
            for (const auto& nu : nus) {
                Matrix res = ybe ? ybe_residual(r_matrix(nu, order))
                                 : hecke_residual(r_matrix(nu, order));
                rep.add("nu=" + nu.get_str(),
                        res.is_zero() ? CheckStatus::pass : CheckStatus::fail);
            }
            return em.emit(rep);
        }
        if (*bial_cmd) {
            em.command = "check bialgebra";
            Rational nu = parse_rational_literal(bial_nu);
            em.inputs["nu"] = nu.get_str();
            em.inputs["bound"] = bial_bound;
            return em.emit(check_preset_bialgebra(nu, bial_bound, order,
                                                  EfConvention::plus_ij, opts));
        }
        if (*dep_cmd) {
            em.command = "check dependency";
            int bound = dep_bound > 0 ? dep_bound : (dep_n >= 4 ? 7 : cfg.degree_bound);
            em.inputs["n"] = dep_n;
            em.inputs["bound"] = bound;
            return em.emit(check_dependency(dep_n, bound, order, opts));
        }
        if (*dj_cmd) {
            em.command = "check dj-image";
            int bound = dj_bound > 0 ? dj_bound : (dj_n >= 4 ? 7 : cfg.degree_bound);
            em.inputs["n"] = dj_n;
            em.inputs["bound"] = bound;
            return em.emit(verify_dj_image(dj_n, bound, order, opts));
        }
        if (*serre_cmd) {
            em.command = "serre";
            auto semi = serre_cartan.find(';');
            if (semi == std::string::npos)
                throw input_error("cartan matrix must look like \"2,-1;-3,2\"");
            auto row1 = parse_grid(serre_cartan.substr(0, semi));
            auto row2 = parse_grid(serre_cartan.substr(semi + 1));
            if (row1.size() != 2 || row2.size() != 2)
                throw input_error("cartan matrix needs four entries");
            auto as_int = [](const Rational& r) {
                if (r.get_den() != 1)
                    throw input_error("cartan entries must be integers");
                return int(r.get_num().get_si());
            };
            CartanMatrix cartan(as_int(row1[0]), as_int(row1[1]), as_int(row2[0]),
                                as_int(row2[1]));
            em.inputs["cartan"] = serre_cartan;
            GeneratorTable table({"x1", "x2"});
            Json payload = Json::array();
            for (const auto& rel : serre_relations(cartan, table, "x1", "x2", order))
                payload.push_back(print_ncpoly(rel, table));
            return em.emit_payload(payload);
        }
        if (*osc_con) {
            em.command = "oscillator constraints";
            Json payload = Json::array();
            GeneratorTable coeff = coefficient_table();
            for (const auto& c : covariance_constraints(oscillator_relation(order),
                                                        standard_coaction(order), order)) {
                Json row;
                row["oscillator_word"] = c.oscillator_word;
                row["constraint"] = print_ncpoly(c.poly, coeff);
                payload.push_back(std::move(row));
            }
            return em.emit_payload(payload);
        }
        if (*osc_com) {
            em.command = "oscillator comodule";
            Report com = check_comodule(standard_coaction(order),
                                        coefficient_delta(order),
                                        coefficient_counit(order), order);
            Report coa = check_coassociativity(coefficient_delta(order), order);
            for (auto& item : coa.items)
                com.items.push_back(item);
            com.title = "comodule+coassociativity";
            return em.emit(com);
        }
        if (*osc_sl2) {
            em.command = "oscillator sl2";
            em.inputs["bound"] = sl2_bound;
            return em.emit(verify_sl2_substitution(sl2_bound, order, opts));
        }
        if (*member_cmd) {
            em.command = "member";
            int bound = member_bound > 0 ? member_bound : cfg.degree_bound;
            em.inputs["bound"] = bound;
            std::vector<std::string> names;
            std::string item;
            std::istringstream in(member_table);
            while (std::getline(in, item, ','))
                names.push_back(item);
            GeneratorTable table(names);
            std::ifstream file(member_file);
            if (!file)
                throw input_error("cannot open relation file '" + member_file + "'");
            std::stringstream buffer;
            buffer << file.rdbuf();
            RelationSet rels = parse_relation_file(buffer.str(), table, order);
            RewriteSystem sys(table);
            sys.add_relations(rels);
            RewriteSystem completed = complete(std::move(sys), bound, opts);
            NcPoly p = parse_expression(member_expr, table, order);
            MemberStatus st = ideal_member_status(p, completed);
            Report rep;
            rep.title = "member";
            rep.add("membership", status_of(st),
                    st == MemberStatus::member
                        ? ""
                        : print_ncpoly(normal_form(p, completed), table));
            return em.emit(rep);
        }
        throw input_error("no subcommand");
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
