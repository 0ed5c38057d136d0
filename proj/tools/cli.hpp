#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "test_functions.hpp"
#include "trigfund/approximants.hpp"
#include "trigfund/grid.hpp"
#include "trigfund/kernels.hpp"
#include "trigfund/validation.hpp"

namespace trigfund::cli {

inline constexpr int kDefaultCurvePoints = 721;

enum class OutputFormat { Csv, Json };
enum class InnerProduct { Discrete, Continuous };

/// Parameters shared by all subcommands; unused fields are ignored.
struct RunConfig {
    GridKind grid = GridKind::Type0;
    int n = 9;
    std::string basis = "interp-poly";
    std::optional<int> q;
    int r = 1;
    int trunc = kDefaultTruncation;
    /// Curve samples for basis/fit, quadrature points for a continuous gram.
    std::optional<int> points;
    TestFunction func = TestFunction::Sin2;
    OutputFormat format = OutputFormat::Csv;
    std::string out;
    std::vector<int> indices;
    InnerProduct product = InnerProduct::Discrete;
};

struct Column {
    std::string name;
    std::vector<double> values;
};

/// Columns of equal length; the first is the abscissa.
struct Table {
    std::vector<Column> columns;

    [[nodiscard]] std::size_t rows() const noexcept {
        return columns.empty() ? 0 : columns.front().values.size();
    }
};

/// Throws Error(InvalidArgument) for an unknown basis name or a missing q.
[[nodiscard]] BasisSpec make_basis_spec(const RunConfig& config);

/// Column label for basis function j, e.g. tm_3, phi_5_q2, ts_5_r1, tsls_5_q3_r1.
[[nodiscard]] std::string series_name(const RunConfig& config, int j);

/// P equally spaced points 2πi/(P-1) on [0, 2π]. Points that coincide with a
/// grid node are set to the stored node value, so node rows are exact.
[[nodiscard]] std::vector<double> curve_abscissae(const UniformGrid& grid, int points);

[[nodiscard]] Table grid_table(const RunConfig& config);
[[nodiscard]] Table basis_table(const RunConfig& config);

struct FitReport {
    Table curve; // t, f, approx
    double node_sse = 0.0;
    double max_abs_error = 0.0;
    std::optional<FourierCoeffs> coeffs; // polynomial bases only
};

[[nodiscard]] FitReport fit(const RunConfig& config);

struct GramReport {
    GramMatrix gram;
    double max_deviation = 0.0;
    double max_off_diagonal = 0.0;
};

[[nodiscard]] GramReport gram(const RunConfig& config);

/// One basis plot: the configurations whose columns share an axis.
struct FigureSpec {
    int id = 0;
    std::string caption;
    std::vector<RunConfig> members;
};

/// The nine N = 9 basis plots (tm, ts, φ and LS-spline families).
[[nodiscard]] std::vector<FigureSpec> figure_specs(int points = kDefaultCurvePoints,
                                                   int trunc = kDefaultTruncation);
[[nodiscard]] Table figure_table(const FigureSpec& figure);

/// 17 significant digits, round-trip safe.
[[nodiscard]] std::string format_number(double x);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace trigfund::cli
