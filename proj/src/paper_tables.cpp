#include "hecke/paper_tables.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/dh_solvers.hpp"
#include "hecke/errors.hpp"
#include "hecke/zero_density.hpp"

#ifndef HECKE_DEFAULT_DATA_DIR
#define HECKE_DEFAULT_DATA_DIR "data"
#endif

namespace hecke {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char sep, std::size_t max_fields = 0) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        if (max_fields && out.size() + 1 == max_fields) {
            out.push_back(line.substr(start));
            break;
        }
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view s, std::string_view where) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorKind::Data, "malformed number '" + std::string(s) + "' in " + std::string(where));
    return v;
}

std::optional<double> parse_optional(std::string_view s, std::string_view where) {
    if (s.empty()) return std::nullopt;
    return parse_number(s, where);
}

int decimals(std::string_view s) {
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return 0;
    return static_cast<int>(s.size() - dot - 1);
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorKind::Data, "cannot open " + p.string());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

struct ManifestEntry {
    std::string id;
    std::string file;
    TableMethod method;
    std::string case_name;
    std::optional<double> reference_factor;
    std::string caption;
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& dir) {
    const auto lines = read_lines(dir / "manifest.csv");
    std::vector<ManifestEntry> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',', 6);
        if (f.size() != 6) throw Error(ErrorKind::Data, "manifest line " + std::to_string(i + 1) + " malformed");
        out.push_back({f[0], f[1], parse_table_method(f[2]), f[3], parse_optional(f[4], "manifest"), f[5]});
    }
    return out;
}

PaperTable read_table(const ManifestEntry& m, const std::filesystem::path& dir) {
    PaperTable t{m.id, m.caption, m.method, m.case_name, m.reference_factor, {}, {}};
    const auto path = dir / "tables" / m.file;
    const auto lines = read_lines(path);
    const std::string where = path.filename().string();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (m.method == TableMethod::ZeroDensity) {
            if (f.size() != 3) throw Error(ErrorKind::Data, where + ": expected 3 fields");
            std::optional<long long> n;
            if (f[2] != "inf") n = static_cast<long long>(parse_number(f[2], where));
            t.cells.push_back({parse_number(f[0], where), parse_number(f[1], where), n});
        } else {
            if (f.size() != 5) throw Error(ErrorKind::Data, where + ": expected 5 fields");
            t.rows.push_back({parse_number(f[0], where), parse_optional(f[1], where), parse_number(f[2], where),
                              parse_optional(f[3], where), parse_optional(f[4], where),
                              {decimals(f[1]), decimals(f[2]), decimals(f[3]), decimals(f[4])}});
        }
    }
    return t;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

RowReport smoothed_row(const SolverCase& c, const TableRow& row, double tol) {
    RowReport r{row.b, row.lambda, row.lambda_star};
    if (!row.lambda) {
        r.skipped = true;
        r.diagnostic = "missing lambda";
        return r;
    }
    try {
        const BoundResult res = solve_smoothed(c, autocorrelation(parabolic_cap(*row.lambda)), row.b);
        r.computed = res.lambda_star;
        r.side_ok = res.side_ok;
    } catch (const Error& e) {
        r.diagnostic = e.what();
        return r;
    }
    r.deviation = *r.computed - row.lambda_star;
    r.pass = std::abs(r.deviation) <= tol * std::abs(row.lambda_star);
    return r;
}

// Best side-feasible deviation over a 41 x 41 grid of the printed rounding box of (lambda, J).
bool rounding_box_ok(const SolverCase& c, const TableRow& row, double tol) {
    const double hl = half_ulp(row.decimals.lambda);
    const double hj = half_ulp(row.decimals.J);
    const int n = 20;
    for (int i = -n; i <= n; ++i) {
        for (int k = -n; k <= n; ++k) {
            try {
                const BoundResult res = evaluate_poly(c, row.b, *row.lambda + hl * i / n, *row.J + hj * k / n);
                if (res.side_ok && std::abs(res.lambda_star - row.lambda_star) <= tol) return true;
            } catch (const Error&) {
            }
        }
    }
    return false;
}

RowReport poly_row(const SolverCase& c, const TableRow& row, double tol) {
    RowReport r{row.b, row.lambda, row.lambda_star};
    if (!row.lambda || !row.J) {
        r.skipped = true;
        r.diagnostic = "missing lambda or J";
        return r;
    }
    try {
        const BoundResult res = evaluate_poly(c, row.b, *row.lambda, *row.J);
        r.computed = res.lambda_star;
        r.side_ok = res.side_ok;
    } catch (const Error& e) {
        r.diagnostic = e.what();
        return r;
    }
    r.deviation = *r.computed - row.lambda_star;
    r.pass = std::abs(r.deviation) <= tol && r.side_ok;
    r.box_ok = r.pass || rounding_box_ok(c, row, tol);
    if (!r.side_ok) r.diagnostic = "side condition fails at the root";
    return r;
}

RowReport zd_row(const ZdCell& cell, double tol) {
    RowReport r{cell.b, cell.lambda, cell.n_bound ? static_cast<double>(*cell.n_bound) : INFINITY};
    const double theta = zd_recipe_theta(cell.b, cell.lambda);
    std::optional<long long> n;
    try {
        n = n_lambda_integer_bound({autocorrelation(cosine_cap(theta, cell.lambda)), cell.lambda, cell.b});
    } catch (const Error& e) {
        r.diagnostic = e.what();
        return r;
    }
    r.side_ok = true;
    r.computed = n ? static_cast<double>(*n) : INFINITY;
    if (!n || !cell.n_bound) {
        r.deviation = n.has_value() == cell.n_bound.has_value() ? 0.0 : INFINITY;
    } else {
        r.deviation = static_cast<double>(*n - *cell.n_bound);
    }
    r.pass = std::abs(r.deviation) <= tol;
    return r;
}

}  // namespace

double half_ulp(int decimals) { return 0.5 * std::pow(10.0, -decimals) * (1.0 + 1e-9); }

std::string_view to_string(TableMethod m) {
    switch (m) {
        case TableMethod::Smoothed: return "smoothed";
        case TableMethod::Polynomial: return "polynomial";
        case TableMethod::ZeroDensity: return "zero_density";
    }
    return "unknown";
}

TableMethod parse_table_method(std::string_view text) {
    if (text == "smoothed") return TableMethod::Smoothed;
    if (text == "polynomial") return TableMethod::Polynomial;
    if (text == "zero_density") return TableMethod::ZeroDensity;
    throw Error(ErrorKind::Data, "unknown table method '" + std::string(text) + "'");
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("HECKE_DATA_DIR"); env && *env) return env;
    return HECKE_DEFAULT_DATA_DIR;
}

std::vector<std::string> table_ids(const std::filesystem::path& dir) {
    std::vector<std::string> ids;
    for (const auto& m : read_manifest(dir)) ids.push_back(m.id);
    return ids;
}

PaperTable load_table(std::string_view id, const std::filesystem::path& dir) {
    for (const auto& m : read_manifest(dir))
        if (m.id == id) return read_table(m, dir);
    throw Error(ErrorKind::Data, "unknown table '" + std::string(id) + "'");
}

std::vector<PaperTable> load_all_tables(const std::filesystem::path& dir) {
    std::vector<PaperTable> out;
    for (const auto& m : read_manifest(dir)) out.push_back(read_table(m, dir));
    return out;
}

std::string table_to_json(const PaperTable& t, int indent) {
    json j;
    j["id"] = t.id;
    j["caption"] = t.caption;
    j["method"] = std::string(to_string(t.method));
    j["case"] = t.case_name;
    j["reference_factor"] = optional_json(t.reference_factor);
    if (t.method == TableMethod::ZeroDensity) {
        j["cells"] = json::array();
        for (const auto& c : t.cells)
            j["cells"].push_back({{"b", c.b}, {"lambda", c.lambda}, {"n_bound", c.n_bound ? json(*c.n_bound) : json(nullptr)}});
    } else {
        j["rows"] = json::array();
        for (const auto& r : t.rows)
            j["rows"].push_back({{"b", r.b},
                                 {"reference", optional_json(r.reference)},
                                 {"lambda_star", r.lambda_star},
                                 {"lambda", optional_json(r.lambda)},
                                 {"J", optional_json(r.J)},
                                 {"decimals",
                                  {r.decimals.reference, r.decimals.lambda_star, r.decimals.lambda, r.decimals.J}}});
    }
    return j.dump(indent);
}

PaperTable table_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        PaperTable t;
        t.id = j.at("id").get<std::string>();
        t.caption = j.at("caption").get<std::string>();
        t.method = parse_table_method(j.at("method").get<std::string>());
        t.case_name = j.at("case").get<std::string>();
        t.reference_factor = optional_from(j, "reference_factor");
        if (t.method == TableMethod::ZeroDensity) {
            for (const auto& c : j.at("cells")) {
                std::optional<long long> n;
                if (!c.at("n_bound").is_null()) n = c.at("n_bound").get<long long>();
                t.cells.push_back({c.at("b").get<double>(), c.at("lambda").get<double>(), n});
            }
        } else {
            for (const auto& r : j.at("rows")) {
                const auto d = r.at("decimals").get<std::array<int, 4>>();
                t.rows.push_back({r.at("b").get<double>(), optional_from(r, "reference"),
                                  r.at("lambda_star").get<double>(), optional_from(r, "lambda"),
                                  optional_from(r, "J"), {d[0], d[1], d[2], d[3]}});
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Data, std::string("table JSON: ") + e.what());
    }
}

std::vector<std::string> monotonicity_violations(const PaperTable& t) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const auto& p = t.rows[i - 1];
        const auto& r = t.rows[i];
        if (!(r.b > p.b)) out.push_back(t.id + ": b not increasing at b=" + std::to_string(r.b));
        if (!(r.lambda_star < p.lambda_star)) out.push_back(t.id + ": lambda* not decreasing at b=" + std::to_string(r.b));
    }
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
        for (std::size_t k = 0; k < t.cells.size(); ++k) {
            const auto& a = t.cells[i];
            const auto& c = t.cells[k];
            if (a.b != c.b || !(a.lambda < c.lambda)) continue;
            const double na = a.n_bound ? static_cast<double>(*a.n_bound) : INFINITY;
            const double nc = c.n_bound ? static_cast<double>(*c.n_bound) : INFINITY;
            if (na > nc)
                out.push_back(t.id + ": bound decreases in lambda at b=" + std::to_string(a.b) +
                              ", lambda=" + std::to_string(c.lambda));
        }
    }
    return out;
}

int RegressReport::passed() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass; }));
}

int RegressReport::failed() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return !r.pass && !r.skipped; }));
}

int RegressReport::box_passed() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.box_ok.value_or(r.pass); }));
}

int RegressReport::skipped() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.skipped; }));
}

double default_tolerance(TableMethod m) {
    switch (m) {
        case TableMethod::Polynomial: return 2e-4;
        case TableMethod::Smoothed: return 1e-3;
        case TableMethod::ZeroDensity: return 0.0;
    }
    return 0.0;
}

RegressReport regress(const PaperTable& t, double tolerance) {
    RegressReport rep{t.id, tolerance, {}};
    if (t.method == TableMethod::ZeroDensity) {
        for (const auto& cell : t.cells) rep.rows.push_back(zd_row(cell, tolerance));
        return rep;
    }
    const SolverCase& c = solver_case(t.case_name);
    for (const auto& row : t.rows)
        rep.rows.push_back(t.method == TableMethod::Polynomial ? poly_row(c, row, tolerance)
                                                               : smoothed_row(c, row, tolerance));
    return rep;
}

RegressReport reference_column_check(const PaperTable& t) {
    if (!t.reference_factor) throw Error(ErrorKind::Data, t.id + " has no reference column");
    RegressReport rep{t.id, 5e-4, {}};
    for (const auto& row : t.rows) {
        RowReport r{row.b, row.lambda, row.reference.value_or(NAN)};
        if (!row.reference) {
            r.skipped = true;
            r.diagnostic = "missing reference value";
            rep.rows.push_back(r);
            continue;
        }
        const double tol = std::max(5e-4, half_ulp(row.decimals.reference));
        r.computed = *t.reference_factor * std::log(1.0 / row.b);
        r.deviation = *r.computed - *row.reference;
        r.side_ok = true;
        r.pass = std::abs(r.deviation) <= tol;
        rep.rows.push_back(r);
    }
    return rep;
}

std::vector<std::string> cross_table_mismatches(const PaperTable& a, const PaperTable& b, double b_min) {
    std::vector<std::string> out;
    for (const auto& ra : a.rows) {
        if (ra.b < b_min) continue;
        const auto it = std::find_if(b.rows.begin(), b.rows.end(), [&](const TableRow& rb) { return rb.b == ra.b; });
        if (it == b.rows.end()) {
            out.push_back("b=" + std::to_string(ra.b) + " missing from " + b.id);
            continue;
        }
        if (ra.lambda != it->lambda || ra.J != it->J || ra.lambda_star != it->lambda_star)
            out.push_back("b=" + std::to_string(ra.b) + " differs between " + a.id + " and " + b.id);
    }
    return out;
}

std::vector<Erratum> load_errata(const std::filesystem::path& dir) {
    const auto path = dir / "errata.csv";
    if (!std::filesystem::exists(path)) return {};
    const auto lines = read_lines(path);
    std::vector<Erratum> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',', 3);
        if (f.size() != 3) throw Error(ErrorKind::Data, "errata line " + std::to_string(i + 1) + " malformed");
        out.push_back({f[0], parse_number(f[1], "errata.csv"), f[2]});
    }
    return out;
}

}  // namespace hecke
