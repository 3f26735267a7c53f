#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

enum class TableMethod { Smoothed, Polynomial, ZeroDensity };

std::string_view to_string(TableMethod m);
TableMethod parse_table_method(std::string_view text);

// Digits after the decimal point as printed.
struct PrintedDecimals {
    int reference = 0;
    int lambda_star = 0;
    int lambda = 0;
    int J = 0;
};

struct TableRow {
    double b = 0.0;
    std::optional<double> reference;
    double lambda_star = 0.0;
    std::optional<double> lambda;
    std::optional<double> J;
    PrintedDecimals decimals;
};

// Half a unit in the last printed digit.
double half_ulp(int decimals);

// One zero-density cell; nullopt bound marks a failed precondition.
struct ZdCell {
    double b = 0.0;
    double lambda = 0.0;
    std::optional<long long> n_bound;
};

struct PaperTable {
    std::string id;
    std::string caption;
    TableMethod method = TableMethod::Polynomial;
    std::string case_name;
    std::optional<double> reference_factor;
    std::vector<TableRow> rows;
    std::vector<ZdCell> cells;
};

// HECKE_DATA_DIR if set, else the bundled data directory.
std::filesystem::path default_data_dir();

std::vector<std::string> table_ids(const std::filesystem::path& dir = default_data_dir());
PaperTable load_table(std::string_view id, const std::filesystem::path& dir = default_data_dir());
std::vector<PaperTable> load_all_tables(const std::filesystem::path& dir = default_data_dir());

// Round trip through the JSON emitter.
std::string table_to_json(const PaperTable& t, int indent = 2);
PaperTable table_from_json(std::string_view text);

// Strictly increasing b and strictly decreasing lambda*; for zero-density tables,
// bounds nondecreasing in lambda at fixed b. Returns one message per violation.
std::vector<std::string> monotonicity_violations(const PaperTable& t);

struct RowReport {
    double b = 0.0;
    std::optional<double> lambda;
    double expected = 0.0;
    std::optional<double> computed;
    double deviation = 0.0;
    bool side_ok = false;
    bool pass = false;
    bool skipped = false;
    // Polynomial rows: a side-feasible (lambda, J) within the printed rounding of the listed values
    // reproduces lambda* to tolerance.
    std::optional<bool> box_ok;
    std::string diagnostic;
};

struct RegressReport {
    std::string id;
    double tolerance = 0.0;
    std::vector<RowReport> rows;

    int passed() const;
    int failed() const;
    int skipped() const;
    int box_passed() const;
};

// Polynomial rows use the exact solver, smoothed rows the parabolic cap at the row's lambda,
// zero-density cells the cosine cap with the theta recipe. Tolerance is absolute except for
// smoothed rows, where it is relative to the table value.
RegressReport regress(const PaperTable& t, double tolerance);
double default_tolerance(TableMethod m);

// reference = factor log(1/b) to max(5e-4, half a unit in the last printed digit).
RegressReport reference_column_check(const PaperTable& t);

// Rows with b >= b_min whose (lambda, J, lambda*) differ between the two tables.
std::vector<std::string> cross_table_mismatches(const PaperTable& a, const PaperTable& b, double b_min);

struct Erratum {
    std::string id;
    double b;
    std::string note;
};

std::vector<Erratum> load_errata(const std::filesystem::path& dir = default_data_dir());

}  // namespace hecke
