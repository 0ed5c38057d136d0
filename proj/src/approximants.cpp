#include "trigfund/approximants.hpp"

#include <cmath>
#include <string>

#include "trigfund/error.hpp"

namespace trigfund {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

int harmonics_of(const UniformGrid& grid, const BasisSpec& spec) {
    return std::visit(overloaded{
                          [&](const InterpPoly&) { return grid.harmonic_order(); },
                          [&](const InterpSpline&) { return grid.harmonic_order(); },
                          [&](const LSPoly& s) { return s.q; },
                          [&](const LSSpline& s) { return s.q; },
                      },
                      spec);
}

std::optional<SplineShape> shape_of(const BasisSpec& spec) {
    if (const auto* s = std::get_if<InterpSpline>(&spec)) {
        return s->shape;
    }
    if (const auto* s = std::get_if<LSSpline>(&spec)) {
        return s->shape;
    }
    return std::nullopt;
}

} // namespace

SampleSet::SampleSet(UniformGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(grid_.size()) + " sample values, got " +
                        std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFiniteInput, "sample values must be finite");
        }
    }
}

double SampleSet::value(int j) const {
    check_node_index(grid_, j);
    return values_[static_cast<std::size_t>(j - 1)];
}

Basis::Basis(UniformGrid grid, BasisSpec spec)
    : grid_(std::move(grid)), spec_(spec), harmonics_(harmonics_of(grid_, spec_)) {
    check_budget(grid_, harmonics_);
    if (auto shape = shape_of(spec_)) {
        spline_.emplace(grid_, *shape);
    }
}

bool Basis::is_interpolating() const noexcept {
    return std::holds_alternative<InterpPoly>(spec_) || std::holds_alternative<InterpSpline>(spec_);
}

double Basis::operator()(int j, double t) const {
    if (spline_) {
        return (*spline_)(j, harmonics_, t);
    }
    return phi_ls_eval(grid_, j, harmonics_, t);
}

std::vector<double> Basis::values(double t) const {
    std::vector<double> out(static_cast<std::size_t>(grid_.size()));
    for (int j = 1; j <= grid_.size(); ++j) {
        out[static_cast<std::size_t>(j - 1)] = (*this)(j, t);
    }
    return out;
}

Approximant::Approximant(SampleSet samples, Basis basis)
    : samples_(std::move(samples)), basis_(std::move(basis)) {
    if (!(samples_.grid() == basis_.grid())) {
        throw Error(ErrorCode::GridMismatch, "samples and basis live on different grids");
    }
}

double Approximant::evaluate(double t) const {
    const double wrapped = wrap_angle(t);
    const auto f = samples_.values();
    double sum = 0.0;
    for (int j = 1; j <= grid().size(); ++j) {
        sum += f[static_cast<std::size_t>(j - 1)] * basis_(j, wrapped);
    }
    return sum;
}

std::vector<double> Approximant::evaluate(std::span<const double> ts) const {
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        out.push_back(evaluate(t));
    }
    return out;
}

Approximant build(const SampleSet& samples, const BasisSpec& spec) {
    return Approximant(samples, Basis(samples.grid(), spec));
}

FourierCoeffs fourier_coeffs(const SampleSet& samples) {
    const auto& grid = samples.grid();
    const int order = grid.harmonic_order();
    const double scale = 2.0 / grid.size();
    const auto f = samples.values();
    const auto nodes = grid.nodes();

    FourierCoeffs c;
    c.a.assign(static_cast<std::size_t>(order), 0.0);
    c.b.assign(static_cast<std::size_t>(order), 0.0);
    for (std::size_t j = 0; j < f.size(); ++j) {
        c.a0 += f[j];
    }
    c.a0 *= scale;
    for (int k = 1; k <= order; ++k) {
        double sa = 0.0;
        double sb = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            sa += f[j] * std::cos(k * nodes[j]);
            sb += f[j] * std::sin(k * nodes[j]);
        }
        c.a[static_cast<std::size_t>(k - 1)] = scale * sa;
        c.b[static_cast<std::size_t>(k - 1)] = scale * sb;
    }
    return c;
}

double partial_sum_eval(const FourierCoeffs& coeffs, int q, double t) {
    if (q < 0) {
        throw Error(ErrorCode::InvalidArgument, "harmonic budget q must be >= 0");
    }
    if (q > coeffs.order()) {
        throw Error(ErrorCode::BudgetTooLarge, "harmonic budget q = " + std::to_string(q) +
                                                   " exceeds coefficient order " +
                                                   std::to_string(coeffs.order()));
    }
    const double x = wrap_angle(t);
    double sum = 0.5 * coeffs.a0;
    for (int k = 1; k <= q; ++k) {
        sum += coeffs.a[static_cast<std::size_t>(k - 1)] * std::cos(k * x) +
               coeffs.b[static_cast<std::size_t>(k - 1)] * std::sin(k * x);
    }
    return sum;
}

FourierCoeffs truncate(const FourierCoeffs& coeffs, int q) {
    if (q < 0) {
        throw Error(ErrorCode::InvalidArgument, "harmonic budget q must be >= 0");
    }
    if (q > coeffs.order()) {
        throw Error(ErrorCode::BudgetTooLarge, "cannot truncate to q = " + std::to_string(q));
    }
    FourierCoeffs out = coeffs;
    for (auto k = static_cast<std::size_t>(q); k < out.a.size(); ++k) {
        out.a[k] = 0.0;
        out.b[k] = 0.0;
    }
    return out;
}

double residual_sse(const SampleSet& samples, const Approximant& approx) {
    if (!(samples.grid() == approx.grid())) {
        throw Error(ErrorCode::GridMismatch, "samples and approximant live on different grids");
    }
    const auto nodes = samples.grid().nodes();
    const auto f = samples.values();
    double sse = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double r = f[j] - approx.evaluate(nodes[j]);
        sse += r * r;
    }
    return sse;
}

} // namespace trigfund
