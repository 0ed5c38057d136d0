#include "trigfund/kernels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trigfund/error.hpp"

namespace trigfund {
namespace {

constexpr double kDegenerateThreshold = 1e-12;

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

void check_harmonic(int k, int n_nodes) {
    const int order = (n_nodes - 1) / 2;
    if (k < 1 || k > order) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "harmonic " + std::to_string(k) + " outside 1.." + std::to_string(order));
    }
}

void check_node_count(int n_nodes) {
    if (n_nodes < 3 || n_nodes % 2 == 0) {
        throw Error(ErrorCode::EvenOrTooSmallN,
                    "node count must be odd and >= 3, got " + std::to_string(n_nodes));
    }
}

// (-1)^(m*l)
double alias_sign(int tag, int m) { return (tag == 1 && m % 2 == 1) ? -1.0 : 1.0; }

// Phase of t relative to node t_j, reduced to [0, 2π).
double phase_from(const UniformGrid& grid, int j, double t) {
    return wrap_angle(wrap_angle(t) - grid.node(j));
}

// (1/N)[1 + 2 Σ_{i=1..q} cos(i·phase)]
double dirichlet_profile(int n_nodes, int q, double phase) {
    double sum = 0.0;
    for (int i = 1; i <= q; ++i) {
        sum += std::cos(i * phase);
    }
    return (1.0 + 2.0 * sum) / n_nodes;
}

double series_C_at_phase(int tag, int n_nodes, int k, const SplineShape& shape, double phase) {
    double sum = sigma_factor(k, shape.r, n_nodes) * std::cos(k * phase);
    for (int m = 1; m <= shape.truncation; ++m) {
        const long up = static_cast<long>(m) * n_nodes + k;
        const long down = static_cast<long>(m) * n_nodes - k;
        sum += alias_sign(tag, m) *
               (sigma_factor(up, shape.r, n_nodes) * std::cos(static_cast<double>(up) * phase) +
                sigma_factor(down, shape.r, n_nodes) * std::cos(static_cast<double>(down) * phase));
    }
    return sum;
}

} // namespace

void SplineShape::validate() const {
    if (r < 1) {
        throw Error(ErrorCode::InvalidArgument, "spline parameter r must be >= 1");
    }
    if (truncation < 1) {
        throw Error(ErrorCode::InvalidArgument, "series truncation M must be >= 1");
    }
}

void check_budget(const UniformGrid& grid, int q) {
    if (q < 0) {
        throw Error(ErrorCode::InvalidArgument, "harmonic budget q must be >= 0");
    }
    if (q > grid.harmonic_order()) {
        throw Error(ErrorCode::BudgetTooLarge, "harmonic budget q = " + std::to_string(q) +
                                                   " exceeds n = " +
                                                   std::to_string(grid.harmonic_order()));
    }
}

double tm_eval(const UniformGrid& grid, int k, double t) {
    return dirichlet_profile(grid.size(), grid.harmonic_order(), phase_from(grid, k, t));
}

double phi_ls_eval(const UniformGrid& grid, int j, int q, double t) {
    check_budget(grid, q);
    return dirichlet_profile(grid.size(), q, phase_from(grid, j, t));
}

double sigma_factor(long k, int r, int n_nodes) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "sigma factor index must be >= 1");
    }
    if (r < 1) {
        throw Error(ErrorCode::InvalidArgument, "spline parameter r must be >= 1");
    }
    check_node_count(n_nodes);
    // sin(πk/N) has period 2N in k; reducing first keeps the argument small.
    const long reduced = k % (2L * n_nodes);
    if (reduced % n_nodes == 0) {
        return 0.0;
    }
    const double base = std::sin(kPi * static_cast<double>(reduced) / n_nodes) / static_cast<double>(k);
    return int_pow(base, 1 + r);
}

double series_C(const UniformGrid& grid, int k, const SplineShape& shape, int j, double t) {
    shape.validate();
    check_harmonic(k, grid.size());
    return series_C_at_phase(kind_tag(grid.kind()), grid.size(), k, shape, phase_from(grid, j, t));
}

double series_H(GridKind kind, int k, const SplineShape& shape, int n_nodes) {
    shape.validate();
    check_node_count(n_nodes);
    check_harmonic(k, n_nodes);
    const int tag = kind_tag(kind);
    double sum = sigma_factor(k, shape.r, n_nodes);
    for (int m = 1; m <= shape.truncation; ++m) {
        const long up = static_cast<long>(m) * n_nodes + k;
        const long down = static_cast<long>(m) * n_nodes - k;
        sum += alias_sign(tag, m) *
               (sigma_factor(up, shape.r, n_nodes) + sigma_factor(down, shape.r, n_nodes));
    }
    if (std::abs(sum) < kDegenerateThreshold) {
        throw Error(ErrorCode::DegenerateDenominator,
                    "|H_" + std::to_string(k) + "| < 1e-12 for r = " + std::to_string(shape.r) +
                        ", N = " + std::to_string(n_nodes) +
                        ", M = " + std::to_string(shape.truncation));
    }
    return sum;
}

double ts_eval(const UniformGrid& grid, int j, const SplineShape& shape, double t) {
    return SplineKernel(grid, shape)(j, grid.harmonic_order(), t);
}

double ts_ls_eval(const UniformGrid& grid, int j, int q, const SplineShape& shape, double t) {
    check_budget(grid, q);
    return SplineKernel(grid, shape)(j, q, t);
}

SplineKernel::SplineKernel(UniformGrid grid, SplineShape shape)
    : grid_(std::move(grid)), shape_(shape) {
    shape_.validate();
    const int order = grid_.harmonic_order();
    const int n_nodes = grid_.size();
    const int tag = kind_tag(grid_.kind());
    denominators_.reserve(static_cast<std::size_t>(order));
    offsets_.push_back(0);
    for (int k = 1; k <= order; ++k) {
        const double denom = series_H(grid_.kind(), k, shape_, n_nodes);
        denominators_.push_back(denom);
        terms_.push_back({static_cast<double>(k), sigma_factor(k, shape_.r, n_nodes) / denom});
        for (int m = 1; m <= shape_.truncation; ++m) {
            const long up = static_cast<long>(m) * n_nodes + k;
            const long down = static_cast<long>(m) * n_nodes - k;
            const double sign = alias_sign(tag, m) / denom;
            terms_.push_back({static_cast<double>(up), sign * sigma_factor(up, shape_.r, n_nodes)});
            terms_.push_back({static_cast<double>(down), sign * sigma_factor(down, shape_.r, n_nodes)});
        }
        offsets_.push_back(terms_.size());
    }
}

double SplineKernel::operator()(int j, int q, double t) const {
    check_budget(grid_, q);
    return profile(q, phase_from(grid_, j, t));
}

double SplineKernel::profile(int q, double phase) const {
    check_budget(grid_, q);
    double sum = 0.0;
    for (std::size_t i = 0; i < offsets_[static_cast<std::size_t>(q)]; ++i) {
        sum += terms_[i].weight * std::cos(terms_[i].frequency * phase);
    }
    return (1.0 + 2.0 * sum) / grid_.size();
}

} // namespace trigfund
