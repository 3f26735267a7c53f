#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/dh_solvers.hpp"
#include "hecke/optimizer.hpp"
#include "hecke/oracles.hpp"
#include "hecke/paper_tables.hpp"
#include "hecke/zero_density.hpp"
#include "hecke/zfr.hpp"
#include "report.hpp"

namespace {

using namespace hecke;
using cli::Doc;

struct Globals {
    int precision = 6;
    bool json = false;
    bool csv = false;
    bool md = false;

    cli::Format format() const {
        if (json) return cli::Format::Json;
        if (csv) return cli::Format::Csv;
        if (md) return cli::Format::Md;
        return cli::Format::Text;
    }
};

struct FamilyArgs {
    std::string family;
    std::vector<double> params;

    void add(CLI::App* app) {
        app->add_option("--family", family, "Trial family: triangle | parabolic | cosine | expcos | poly");
        app->add_option("--params", params, "Family parameters")->delimiter(',');
    }
};

std::string fmt(double v, int precision) {
    std::ostringstream s;
    s.precision(precision);
    s << v;
    return s.str();
}

Doc bound_doc(const BoundResult& r) {
    Doc d{{"b", r.b}, {"lambda_star", r.lambda_star}, {"params", r.params}, {"side_ok", r.side_ok},
          {"residual", r.residual}};
    if (!std::isnan(r.salvage)) d["salvage"] = r.salvage;
    return d;
}

Doc report_doc(const OracleReport& r) {
    return {{"check", r.check}, {"grid_size", r.grid_size}, {"worst_violation", r.worst_violation},
            {"tolerance", r.tolerance}, {"location", r.location}, {"pass", r.pass}};
}

Doc row_doc(const RowReport& r) {
    return {{"b", r.b},
            {"lambda", r.lambda ? Doc(*r.lambda) : Doc(nullptr)},
            {"expected", std::isinf(r.expected) ? Doc("inf") : Doc(r.expected)},
            {"computed", !r.computed ? Doc(nullptr) : std::isinf(*r.computed) ? Doc("inf") : Doc(*r.computed)},
            {"deviation", r.deviation},
            {"side_ok", r.side_ok},
            {"box_ok", r.box_ok ? Doc(*r.box_ok) : Doc(nullptr)},
            {"pass", r.pass},
            {"diagnostic", r.diagnostic}};
}

PaperTable table_by_name(const std::string& name) {
    if (name.ends_with(".json")) {
        std::ifstream in(name);
        if (!in) throw Error(ErrorKind::Data, "cannot open " + name);
        std::stringstream buf;
        buf << in.rdbuf();
        return table_from_json(buf.str());
    }
    return load_table(name);
}

Doc table_doc(const PaperTable& t) {
    Doc rows = Doc::array();
    if (t.method == TableMethod::ZeroDensity) {
        for (const auto& c : t.cells)
            rows.push_back({{"b", c.b}, {"lambda", c.lambda}, {"n_bound", c.n_bound ? Doc(*c.n_bound) : Doc("inf")}});
    } else {
        for (const auto& r : t.rows)
            rows.push_back({{"b", r.b},
                            {"reference", r.reference ? Doc(*r.reference) : Doc(nullptr)},
                            {"lambda_star", r.lambda_star},
                            {"lambda", r.lambda ? Doc(*r.lambda) : Doc(nullptr)},
                            {"J", r.J ? Doc(*r.J) : Doc(nullptr)}});
    }
    return {{"id", t.id}, {"caption", t.caption}, {"method", std::string(to_string(t.method))}, {"case", t.case_name},
            {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit inequalities for zeros of Hecke L-functions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Key-value file with option values");
    Globals g;
    app.add_option("--precision", g.precision, "Significant digits")->check(CLI::Range(1, 17));
    auto* fmt_json = app.add_flag("--json", g.json, "JSON output");
    auto* fmt_csv = app.add_flag("--csv", g.csv, "CSV output");
    auto* fmt_md = app.add_flag("--md", g.md, "Markdown output");
    fmt_json->excludes(fmt_csv)->excludes(fmt_md);
    fmt_csv->excludes(fmt_md);

    // zfr
    auto* zfr = app.add_subcommand("zfr", "Zero-free region constants");
    std::string zfr_name;
    double zfr_lambda = 0.0;
    double phi = default_phi;
    bool zfr_opt = false;
    zfr->add_option("--case", zfr_name, "order-ge6 | order5 | order234 | principal")->required();
    zfr->add_option("--lambda", zfr_lambda, "Polynomial-case lambda");
    zfr->add_option("--phi", phi, "Critical-strip constant");
    zfr->add_flag("--optimize", zfr_opt, "Search lambda");

    // dh
    auto* dh = app.add_subcommand("dh", "Deuring-Heilbronn repulsion bound");
    std::string dh_case;
    double dh_b = 0.0;
    double dh_lambda = 0.0;
    double dh_J = 0.0;
    FamilyArgs dh_family;
    dh->add_option("--case", dh_case, "Solver case")->required();
    dh->add_option("--b", dh_b, "Upper bound on lambda1")->required();
    dh->add_option("--lambda", dh_lambda, "Polynomial lambda");
    dh->add_option("--J", dh_J, "Polynomial J");
    dh->add_option("--phi", phi, "Critical-strip constant");
    dh_family.add(dh);

    // zd
    auto* zd = app.add_subcommand("zd", "Zero-density bound");
    double zd_lambda = 0.0;
    double zd_b = 0.0;
    double vartheta = 0.75;
    bool zd_opt = false;
    FamilyArgs zd_family;
    zd->add_option("--lambda", zd_lambda, "Region height")->required();
    zd->add_option("--b", zd_b, "Lower bound on lambda1");
    zd->add_option("--vartheta", vartheta, "Conductor weight in [3/4, 1]");
    zd->add_option("--phi", phi, "Critical-strip constant");
    zd->add_flag("--optimize", zd_opt, "Minimize over the cosine-cap angle");
    zd_family.add(zd);

    // table
    auto* table = app.add_subcommand("table", "Bundled tables");
    std::string table_name;
    std::string table_regress;
    std::string table_format;
    double tolerance = -1.0;
    bool table_list = false;
    table->add_flag("--list", table_list, "List table ids");
    table->add_option("--name", table_name, "Table id to print");
    table->add_option("--format", table_format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));
    table->add_option("--regress", table_regress, "Table id or JSON file to regress");
    table->add_option("--tolerance", tolerance, "Regression tolerance");

    // optimize
    auto* optimize = app.add_subcommand("optimize", "Parameter search");
    std::string opt_case;
    double opt_b = 0.0;
    int budget = 200000;
    std::string opt_family = "parabolic";
    optimize->add_option("--case", opt_case, "Solver case")->required();
    optimize->add_option("--b", opt_b, "Upper bound on lambda1")->required();
    optimize->add_option("--budget", budget, "Evaluation budget")->check(CLI::PositiveNumber);
    optimize->add_option("--family", opt_family, "Smoothed family: parabolic | cosine")
        ->check(CLI::IsMember({"parabolic", "cosine"}));
    optimize->add_option("--phi", phi, "Critical-strip constant");

    // verify
    auto* verify = app.add_subcommand("verify", "Oracle verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "laplace | p4 | positivity | roots | all")
        ->check(CLI::IsMember({"laplace", "p4", "positivity", "roots", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const cli::Report report(g.precision);
    Doc doc;
    int status = 0;
    try {
        if (zfr->parsed()) {
            const ZfrCase& c = zfr_case(zfr_name);
            doc["case"] = c.name;
            doc["phi"] = phi;
            if (c.kind == ZfrKind::Order5) {
                const double v = zfr_order5(phi);
                doc["summary"] = "lambda1 >= " + fmt(v, g.precision);
                doc["lambda1"] = v;
            } else if (c.kind == ZfrKind::OrderGe6) {
                const double v = zfr_order_ge6(order_ge6_trial(), order_ge6_lambda_star, phi);
                doc["summary"] = "lambda1 >= " + fmt(v, g.precision) + " (substitute trial function)";
                doc["lambda1"] = v;
                doc["lambda_star"] = order_ge6_lambda_star;
                doc["family"] = describe(order_ge6_trial());
            } else {
                ZfrResult r;
                if (zfr_opt) {
                    r = zfr_optimize(c, phi).result;
                } else {
                    if (!(zfr_lambda > 0.0)) throw Error(ErrorKind::InvalidParameter, "--lambda is required");
                    r = zfr_solve(c, zfr_lambda, phi);
                }
                doc["summary"] = "lambda1 >= " + fmt(r.lambda1, g.precision) + ", side condition " +
                                 (r.side_ok ? "OK" : "FAILS");
                doc["lambda"] = r.lambda;
                doc["lambda1"] = r.lambda1;
                doc["root"] = r.root;
                doc["side_ok"] = r.side_ok;
                doc["residual"] = r.residual;
                if (!r.side_ok) status = 1;
            }
        } else if (dh->parsed()) {
            const SolverCase& c = solver_case(dh_case);
            BoundResult r;
            if (c.method == Method::Polynomial) {
                if (!(dh_lambda > 0.0) || !(dh_J > 0.0))
                    throw Error(ErrorKind::InvalidParameter, "--lambda and --J are required for " + c.name);
                r = solve_poly(c, dh_b, dh_lambda, dh_J, phi);
            } else {
                if (dh_family.family.empty())
                    throw Error(ErrorKind::InvalidParameter, "--family and --params are required for " + c.name);
                const TrialFunction f = make_trial(dh_family.family, dh_family.params);
                r = solve_smoothed(c, f, dh_b, phi);
                doc["family"] = describe(f);
            }
            doc["summary"] = "lambda* = " + fmt(r.lambda_star, g.precision) + " for lambda1 <= " + fmt(dh_b, g.precision);
            doc["case"] = c.name;
            doc.update(bound_doc(r));
        } else if (zd->parsed()) {
            double theta = zd_recipe_theta(zd_b, zd_lambda);
            TrialFunction f = zd_family.family.empty() ? autocorrelation(cosine_cap(theta, zd_lambda))
                                                       : make_trial(zd_family.family, zd_family.params);
            if (zd_opt) {
                auto score = [&](double th) -> double {
                    try {
                        return -n_lambda_bound({autocorrelation(cosine_cap(th, zd_lambda)), zd_lambda, zd_b, vartheta, phi});
                    } catch (const Error&) {
                        return -INFINITY;
                    }
                };
                const GoldenResult best = golden_max(score, 1e-3, 1.5, 1e-8);
                if (std::isfinite(best.value) && best.value > score(theta)) theta = best.x;
                f = autocorrelation(cosine_cap(theta, zd_lambda));
            }
            const ZdQuery q{f, zd_lambda, zd_b, vartheta, phi};
            const ZdPreconditions pre = zd_preconditions(q);
            doc["family"] = describe(f);
            doc["cond1"] = pre.cond1;
            doc["cond2"] = pre.cond2;
            if (pre.cond1 && pre.cond2) {
                const double v = n_lambda_bound(q);
                doc["summary"] = "N(" + fmt(zd_lambda, g.precision) + ") <= " + std::to_string(n_lambda_integer(v));
                doc["bound"] = v;
                doc["n_bound"] = n_lambda_integer(v);
            } else {
                doc["summary"] = "no bound: preconditions fail";
                doc["n_bound"] = "inf";
            }
        } else if (table->parsed()) {
            if (table_list) {
                Doc rows = Doc::array();
                for (const auto& t : load_all_tables())
                    rows.push_back({{"id", t.id}, {"method", std::string(to_string(t.method))}, {"case", t.case_name},
                                    {"rows", t.method == TableMethod::ZeroDensity ? t.cells.size() : t.rows.size()},
                                    {"caption", t.caption}});
                doc["tables"] = rows;
            } else if (!table_regress.empty()) {
                const PaperTable t = table_by_name(table_regress);
                const double tol = tolerance >= 0.0 ? tolerance : default_tolerance(t.method);
                const RegressReport rep = regress(t, tol);
                const int total = static_cast<int>(rep.rows.size());
                doc["summary"] = t.id + ": " + std::to_string(rep.passed()) + "/" + std::to_string(total) + " rows pass";
                doc["id"] = t.id;
                doc["tolerance"] = tol;
                doc["passed"] = rep.passed();
                doc["failed"] = rep.failed();
                doc["skipped"] = rep.skipped();
                doc["box_passed"] = rep.box_passed();
                Doc rows = Doc::array();
                for (const auto& r : rep.rows) rows.push_back(row_doc(r));
                doc["rows"] = rows;
                if (rep.failed() > 0) status = 1;
            } else if (!table_name.empty()) {
                const PaperTable t = load_table(table_name);
                if (table_format == "json") {
                    std::cout << table_to_json(t) << '\n';
                    return 0;
                }
                doc = table_doc(t);
                const cli::Format f = table_format == "csv" ? cli::Format::Csv
                                      : table_format == "md" ? cli::Format::Md
                                                             : g.format();
                report.emit(doc, f, std::cout);
                return 0;
            } else {
                throw CLI::ValidationError("table", "one of --list, --name or --regress is required");
            }
        } else if (optimize->parsed()) {
            SearchSpec spec{opt_case, opt_b, phi};
            spec.max_evals = budget;
            spec.family = opt_family == "cosine" ? SearchFamily::CosineCap : SearchFamily::ParabolicCap;
            const BoundResult r = maximize_bound(spec);
            doc["summary"] = "lambda* = " + fmt(r.lambda_star, g.precision) + " for lambda1 <= " + fmt(opt_b, g.precision);
            doc["case"] = opt_case;
            doc.update(bound_doc(r));
        } else if (verify->parsed()) {
            const auto reports = verify_suite(parse_suite(suite));
            Doc rows = Doc::array();
            int failures = 0;
            for (const auto& r : reports) {
                rows.push_back(report_doc(r));
                if (!r.pass) ++failures;
            }
            doc["summary"] = std::to_string(reports.size()) + " checks, " + std::to_string(failures) + " violations";
            doc["suite"] = suite;
            doc["checks"] = rows;
            if (failures) status = 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    report.emit(doc, g.format(), std::cout);
    return status;
}
