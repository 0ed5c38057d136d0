#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigfund/error.hpp"

namespace trigfund::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

int quadrature_points(const RunConfig& config) {
    return config.points.value_or(kDefaultQuadraturePoints);
}

int curve_points(const RunConfig& config) {
    const int p = config.points.value_or(kDefaultCurvePoints);
    if (p < 2) {
        throw Error(ErrorCode::InvalidArgument, "--points must be >= 2 for curve output");
    }
    return p;
}

ordered_json table_to_json(const Table& table) {
    ordered_json doc = ordered_json::object();
    for (const auto& column : table.columns) {
        doc[column.name] = column.values;
    }
    return doc;
}

ordered_json coeffs_to_json(const FourierCoeffs& c) {
    ordered_json doc = ordered_json::object();
    doc["a0"] = c.a0;
    doc["a"] = c.a;
    doc["b"] = c.b;
    return doc;
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        write_csv(os, table);
    } else {
        write_json(os, table);
    }
}

// Writes to config.out when set, else to the fallback stream.
template <class Writer>
void emit(const RunConfig& config, std::ostream& fallback, Writer&& writer) {
    if (config.out.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot open output file " + config.out);
    }
    writer(file);
}

Table gram_table(const GramMatrix& g) {
    Table table;
    Column rows{"i", {}};
    for (int i = 1; i <= g.size(); ++i) {
        rows.values.push_back(i);
    }
    table.columns.push_back(std::move(rows));
    for (int j = 1; j <= g.size(); ++j) {
        Column col{"b_" + std::to_string(j), {}};
        for (int i = 1; i <= g.size(); ++i) {
            col.values.push_back(g(i, j));
        }
        table.columns.push_back(std::move(col));
    }
    return table;
}

std::string extension(OutputFormat format) { return format == OutputFormat::Csv ? ".csv" : ".json"; }

} // namespace

BasisSpec make_basis_spec(const RunConfig& config) {
    const SplineShape shape{config.r, config.trunc};
    const auto need_q = [&]() {
        if (!config.q) {
            throw Error(ErrorCode::InvalidArgument, "--q is required for basis " + config.basis);
        }
        return *config.q;
    };
    if (config.basis == "interp-poly") {
        return InterpPoly{};
    }
    if (config.basis == "interp-spline") {
        return InterpSpline{shape};
    }
    if (config.basis == "ls-poly") {
        return LSPoly{need_q()};
    }
    if (config.basis == "ls-spline") {
        return LSSpline{need_q(), shape};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown basis " + config.basis);
}

std::string series_name(const RunConfig& config, int j) {
    const std::string idx = std::to_string(j);
    if (config.basis == "interp-poly") {
        return "tm_" + idx;
    }
    if (config.basis == "interp-spline") {
        return "ts_" + idx + "_r" + std::to_string(config.r);
    }
    const std::string q = config.q ? std::to_string(*config.q) : "?";
    if (config.basis == "ls-poly") {
        return "phi_" + idx + "_q" + q;
    }
    return "tsls_" + idx + "_q" + q + "_r" + std::to_string(config.r);
}

std::vector<double> curve_abscissae(const UniformGrid& grid, int points) {
    if (points < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least 2 curve points");
    }
    const long last = points - 1;
    const long n_nodes = grid.size();
    std::vector<double> t(static_cast<std::size_t>(points));
    for (long i = 0; i < points; ++i) {
        double value = kTwoPi * static_cast<double>(i) / static_cast<double>(last);
        if (i < last) {
            if (grid.kind() == GridKind::Type0 && (i * n_nodes) % last == 0) {
                value = grid.node(static_cast<int>(i * n_nodes / last) + 1);
            } else if (grid.kind() == GridKind::Type1 && (2 * i * n_nodes) % last == 0) {
                const long odd = 2 * i * n_nodes / last;
                if (odd % 2 == 1) {
                    value = grid.node(static_cast<int>((odd + 1) / 2));
                }
            }
        }
        t[static_cast<std::size_t>(i)] = value;
    }
    return t;
}

Table grid_table(const RunConfig& config) {
    const UniformGrid grid(config.grid, config.n);
    Column index{"j", {}};
    Column nodes{"t", {}};
    for (int j = 1; j <= grid.size(); ++j) {
        index.values.push_back(j);
        nodes.values.push_back(grid.node(j));
    }
    return Table{{std::move(index), std::move(nodes)}};
}

Table basis_table(const RunConfig& config) {
    const UniformGrid grid(config.grid, config.n);
    const Basis basis(grid, make_basis_spec(config));
    if (config.indices.empty()) {
        throw Error(ErrorCode::InvalidArgument, "at least one --index is required");
    }
    for (int j : config.indices) {
        check_node_index(grid, j);
    }
    const auto t = curve_abscissae(grid, curve_points(config));
    Table table;
    table.columns.push_back({"t", t});
    for (int j : config.indices) {
        Column col{series_name(config, j), {}};
        col.values.reserve(t.size());
        for (double x : t) {
            col.values.push_back(basis(j, x));
        }
        table.columns.push_back(std::move(col));
    }
    return table;
}

FitReport fit(const RunConfig& config) {
    const UniformGrid grid(config.grid, config.n);
    const auto f = [&](double t) { return evaluate_test_function(config.func, t); };
    const auto spec = make_basis_spec(config);
    const auto samples = SampleSet::from_function(grid, f);
    const auto approx = build(samples, spec);

    FitReport report;
    const auto t = curve_abscissae(grid, curve_points(config));
    Column exact{"f", {}};
    Column fitted{"approx", approx.evaluate(t)};
    for (std::size_t i = 0; i < t.size(); ++i) {
        exact.values.push_back(f(t[i]));
        report.max_abs_error =
            std::max(report.max_abs_error, std::abs(exact.values[i] - fitted.values[i]));
    }
    report.curve.columns = {{"t", t}, std::move(exact), std::move(fitted)};
    report.node_sse = residual_sse(samples, approx);

    if (std::holds_alternative<InterpPoly>(spec)) {
        report.coeffs = fourier_coeffs(samples);
    } else if (const auto* ls = std::get_if<LSPoly>(&spec)) {
        report.coeffs = truncate(fourier_coeffs(samples), ls->q);
    }
    return report;
}

GramReport gram(const RunConfig& config) {
    const UniformGrid grid(config.grid, config.n);
    const auto spec = make_basis_spec(config);
    GramMatrix g = config.product == InnerProduct::Discrete
                       ? discrete_gram(grid, spec)
                       : continuous_gram(grid, spec, quadrature_points(config));
    const double deviation = g.max_deviation_from_identity();
    const double off_diagonal = g.max_off_diagonal();
    return GramReport{std::move(g), deviation, off_diagonal};
}

std::vector<FigureSpec> figure_specs(int points, int trunc) {
    const auto member = [&](GridKind kind, const char* basis, std::vector<int> indices,
                            std::optional<int> q, int r) {
        RunConfig c;
        c.grid = kind;
        c.n = 9;
        c.basis = basis;
        c.indices = std::move(indices);
        c.q = q;
        c.r = r;
        c.trunc = trunc;
        c.points = points;
        return c;
    };
    const std::vector<int> first_odd{1, 3, 5};
    const std::vector<int> fifth{5};

    std::vector<FigureSpec> figs;
    figs.push_back({1, "interpolation polynomials tm_1, tm_3, tm_5 on the Type0 grid",
                    {member(GridKind::Type0, "interp-poly", first_odd, std::nullopt, 1)}});
    figs.push_back({2, "interpolation polynomials tm_1, tm_3, tm_5 on the Type1 grid",
                    {member(GridKind::Type1, "interp-poly", first_odd, std::nullopt, 1)}});
    for (int id : {3, 4}) {
        const auto kind = id == 3 ? GridKind::Type0 : GridKind::Type1;
        FigureSpec fig{id, std::string("interpolation splines ts_5, r = 1, 2, 3, on the ") +
                               (id == 3 ? "Type0" : "Type1") + " grid",
                       {}};
        for (int r : {1, 2, 3}) {
            fig.members.push_back(member(kind, "interp-spline", fifth, std::nullopt, r));
        }
        figs.push_back(std::move(fig));
    }
    FigureSpec ls_poly{5, "LS polynomials phi_5, q = 3, 2, 1, on the Type0 grid", {}};
    for (int q : {3, 2, 1}) {
        ls_poly.members.push_back(member(GridKind::Type0, "ls-poly", fifth, q, 1));
    }
    figs.push_back(std::move(ls_poly));

    struct LsSplineFigure {
        int id;
        GridKind kind;
        int r;
    };
    for (const auto& [id, kind, r] : {LsSplineFigure{6, GridKind::Type0, 1},
                                      LsSplineFigure{7, GridKind::Type0, 3},
                                      LsSplineFigure{8, GridKind::Type1, 1},
                                      LsSplineFigure{9, GridKind::Type1, 2}}) {
        FigureSpec fig{id, "LS splines ts_5, r = " + std::to_string(r) + ", q = 3, 2, 1, on the " +
                               (kind == GridKind::Type0 ? "Type0" : "Type1") + " grid",
                       {}};
        for (int q : {3, 2, 1}) {
            fig.members.push_back(member(kind, "ls-spline", fifth, q, r));
        }
        figs.push_back(std::move(fig));
    }
    return figs;
}

Table figure_table(const FigureSpec& figure) {
    Table merged;
    for (const auto& config : figure.members) {
        Table part = basis_table(config);
        if (merged.columns.empty()) {
            merged.columns.push_back(part.columns.front());
        }
        for (std::size_t c = 1; c < part.columns.size(); ++c) {
            merged.columns.push_back(std::move(part.columns[c]));
        }
    }
    return merged;
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c].name;
    }
    os << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << format_number(table.columns[c].values[r]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& table) { os << table_to_json(table).dump() << '\n'; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fundamental trigonometric polynomials and splines on uniform grids", "trigfund"};
    app.require_subcommand(1);

    RunConfig config;
    int grid_tag = 0;
    int q = 0;
    int points = 0;
    std::string format = "csv";
    std::string func = "sin2";
    std::string product = "discrete";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--grid", grid_tag, "Grid family: 0 (starts at 0) or 1 (half-shifted)")
            ->check(CLI::IsMember({0, 1}));
        sub->add_option("--n", config.n, "Odd node count N >= 3");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", config.out, "Output path (default: standard output)");
    };
    const auto add_basis = [&](CLI::App* sub) {
        sub->add_option("--basis", config.basis, "Basis family")
            ->check(CLI::IsMember({"interp-poly", "interp-spline", "ls-poly", "ls-spline"}));
        sub->add_option("--q", q, "Harmonic budget for LS bases (0 <= q <= (N-1)/2)");
        sub->add_option("--r", config.r, "Spline smoothness r >= 1");
        sub->add_option("--trunc", config.trunc, "Alias-series truncation M >= 1");
        sub->add_option("--points", points, "Curve samples, or quadrature points for gram");
    };

    auto* grid_cmd = app.add_subcommand("grid", "Print the grid nodes");
    add_common(grid_cmd);

    auto* basis_cmd = app.add_subcommand("basis", "Tabulate fundamental basis functions");
    add_common(basis_cmd);
    add_basis(basis_cmd);
    basis_cmd->add_option("--index", config.indices, "1-based node index (repeatable, or 1,3,5)")
        ->delimiter(',')
        ->required();

    auto* fit_cmd = app.add_subcommand("fit", "Interpolate or LS-fit a named test function");
    add_common(fit_cmd);
    add_basis(fit_cmd);
    std::vector<std::string> func_names;
    for (auto name : test_function_names()) {
        func_names.emplace_back(name);
    }
    fit_cmd->add_option("--func", func, "Test function")->check(CLI::IsMember(func_names));

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a basis");
    add_common(gram_cmd);
    add_basis(gram_cmd);
    gram_cmd->add_option("--product", product, "Inner product")
        ->check(CLI::IsMember({"discrete", "continuous"}));

    auto* fig_cmd = app.add_subcommand("figures", "Write data for the nine N = 9 basis plots");
    fig_cmd->add_option("--out", config.out, "Output directory")->required();
    fig_cmd->add_option("--points", points, "Curve samples per plot");
    fig_cmd->add_option("--trunc", config.trunc, "Alias-series truncation M >= 1");
    fig_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "trigfund: " << e.what() << '\n';
        return 2;
    }

    config.grid = grid_tag == 0 ? GridKind::Type0 : GridKind::Type1;
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    config.product = product == "continuous" ? InnerProduct::Continuous : InnerProduct::Discrete;
    config.func = *parse_test_function(func);
    for (auto* sub : {basis_cmd, fit_cmd, gram_cmd}) {
        if (sub->parsed() && sub->count("--q") > 0) {
            config.q = q;
        }
        if (sub->parsed() && sub->count("--points") > 0) {
            config.points = points;
        }
    }
    if (fig_cmd->parsed() && fig_cmd->count("--points") > 0) {
        config.points = points;
    }

    try {
        if (grid_cmd->parsed()) {
            const auto table = grid_table(config);
            emit(config, out, [&](std::ostream& os) { write_table(os, table, config.format); });
        } else if (basis_cmd->parsed()) {
            const auto table = basis_table(config);
            emit(config, out, [&](std::ostream& os) { write_table(os, table, config.format); });
        } else if (fit_cmd->parsed()) {
            const auto report = fit(config);
            emit(config, out, [&](std::ostream& os) {
                if (config.format == OutputFormat::Csv) {
                    write_csv(os, report.curve);
                    return;
                }
                auto doc = table_to_json(report.curve);
                doc["summary"]["node_sse"] = report.node_sse;
                doc["summary"]["max_abs_error"] = report.max_abs_error;
                if (report.coeffs) {
                    doc["summary"]["coefficients"] = coeffs_to_json(*report.coeffs);
                }
                os << doc.dump() << '\n';
            });
            err << "node_sse=" << format_number(report.node_sse) << '\n'
                << "max_abs_error=" << format_number(report.max_abs_error) << '\n';
            if (report.coeffs) {
                err << "a0=" << format_number(report.coeffs->a0) << '\n';
                for (int k = 1; k <= report.coeffs->order(); ++k) {
                    err << "a" << k << "=" << format_number(report.coeffs->a[static_cast<std::size_t>(k - 1)])
                        << " b" << k << "=" << format_number(report.coeffs->b[static_cast<std::size_t>(k - 1)])
                        << '\n';
                }
            }
        } else if (gram_cmd->parsed()) {
            const auto report = gram(config);
            emit(config, out, [&](std::ostream& os) {
                const auto table = gram_table(report.gram);
                if (config.format == OutputFormat::Csv) {
                    write_csv(os, table);
                    return;
                }
                ordered_json doc = ordered_json::object();
                doc["product"] = product;
                std::vector<std::vector<double>> rows;
                for (int i = 1; i <= report.gram.size(); ++i) {
                    auto& row = rows.emplace_back();
                    for (int j = 1; j <= report.gram.size(); ++j) {
                        row.push_back(report.gram(i, j));
                    }
                }
                doc["matrix"] = rows;
                doc["max_deviation"] = report.max_deviation;
                doc["max_off_diagonal"] = report.max_off_diagonal;
                os << doc.dump() << '\n';
            });
            err << "max_deviation=" << format_number(report.max_deviation) << '\n'
                << "max_off_diagonal=" << format_number(report.max_off_diagonal) << '\n';
        } else if (fig_cmd->parsed()) {
            const std::filesystem::path dir(config.out);
            std::filesystem::create_directories(dir);
            for (const auto& fig : figure_specs(config.points.value_or(kDefaultCurvePoints), config.trunc)) {
                const auto path = dir / ("pic" + std::to_string(fig.id) + extension(config.format));
                std::ofstream file(path, std::ios::binary);
                if (!file) {
                    throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
                }
                write_table(file, figure_table(fig), config.format);
                err << path.string() << ": " << fig.caption << '\n';
            }
        }
    } catch (const Error& e) {
        err << "trigfund: " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "trigfund: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace trigfund::cli
