#include "trigfund/validation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace trigfund {
namespace {

constexpr double kSingularRcond = 1e-14;

} // namespace

GramMatrix::GramMatrix(int size, GramNormalization normalization)
    : size_(size), normalization_(normalization),
      entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}

double GramMatrix::operator()(int i, int j) const {
    if (i < 1 || i > size_ || j < 1 || j > size_) {
        throw Error(ErrorCode::IndexOutOfRange, "Gram index out of range");
    }
    return entries_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))];
}

double& GramMatrix::at(int i, int j) {
    if (i < 1 || i > size_ || j < 1 || j > size_) {
        throw Error(ErrorCode::IndexOutOfRange, "Gram index out of range");
    }
    return entries_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))];
}

double GramMatrix::max_deviation_from_identity() const {
    double worst = 0.0;
    for (int i = 1; i <= size_; ++i) {
        for (int j = 1; j <= size_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double GramMatrix::max_off_diagonal() const {
    double worst = 0.0;
    for (int i = 1; i <= size_; ++i) {
        for (int j = 1; j <= size_; ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs((*this)(i, j)));
            }
        }
    }
    return worst;
}

double GramMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int i = 1; i <= size_; ++i) {
        for (int j = i + 1; j <= size_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    }
    return worst;
}

GramMatrix continuous_gram(const UniformGrid& grid, const BasisSpec& basis, int num_points) {
    if (num_points < 16) {
        throw Error(ErrorCode::InvalidArgument, "quadrature needs at least 16 points");
    }
    const Basis b(grid, basis);
    const int n = grid.size();

    // Accumulate all N² rectangle-rule sums in one pass over the points.
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(n, n);
    for (int p = 0; p < num_points; ++p) {
        const auto v = b.values(kTwoPi * p / num_points);
        const Eigen::Map<const Eigen::VectorXd> col(v.data(), n);
        sums.noalias() += col * col.transpose();
    }

    // (N/2π)·(2π/P)·Σ = (N/P)·Σ
    const double scale = static_cast<double>(n) / num_points;
    GramMatrix g(n, GramNormalization::ContinuousScaled);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            g.at(i, j) = scale * sums(i - 1, j - 1);
        }
    }
    return g;
}

GramMatrix discrete_gram(const UniformGrid& grid, const BasisSpec& basis) {
    const Basis b(grid, basis);
    const int n = grid.size();
    std::vector<std::vector<double>> at_nodes;
    at_nodes.reserve(static_cast<std::size_t>(n));
    for (double t : grid.nodes()) {
        at_nodes.push_back(b.values(t));
    }
    GramMatrix g(n, GramNormalization::Discrete);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            double sum = 0.0;
            for (const auto& row : at_nodes) {
                sum += row[static_cast<std::size_t>(i - 1)] * row[static_cast<std::size_t>(j - 1)];
            }
            g.at(i, j) = sum;
        }
    }
    return g;
}

FourierCoeffs ls_oracle(const SampleSet& samples, int q) {
    const auto& grid = samples.grid();
    check_budget(grid, q);
    const auto nodes = grid.nodes();
    const int rows = grid.size();
    const int cols = 2 * q + 1;

    // Columns: 1, cos t, sin t, cos 2t, sin 2t, ...
    Eigen::MatrixXd design(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const double t = nodes[static_cast<std::size_t>(i)];
        design(i, 0) = 1.0;
        for (int k = 1; k <= q; ++k) {
            design(i, 2 * k - 1) = std::cos(k * t);
            design(i, 2 * k) = std::sin(k * t);
        }
    }
    const auto f = samples.values();
    const Eigen::Map<const Eigen::VectorXd> rhs(f.data(), rows);

    const Eigen::MatrixXd normal = design.transpose() * design;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(normal);
    if (!(lu.rcond() > kSingularRcond)) {
        throw Error(ErrorCode::SingularSystem, "normal equations are numerically singular");
    }
    const Eigen::VectorXd c = lu.solve(design.transpose() * rhs);

    FourierCoeffs out;
    const auto order = static_cast<std::size_t>(grid.harmonic_order());
    out.a.assign(order, 0.0);
    out.b.assign(order, 0.0);
    // The constant column carries a0/2.
    out.a0 = 2.0 * c(0);
    for (int k = 1; k <= q; ++k) {
        out.a[static_cast<std::size_t>(k - 1)] = c(2 * k - 1);
        out.b[static_cast<std::size_t>(k - 1)] = c(2 * k);
    }
    return out;
}

double collinearity_defect(const UniformGrid& grid, int j, const SplineShape& shape, int interval) {
    check_node_index(grid, j);
    check_node_index(grid, interval);
    const SplineKernel kernel(grid, shape);
    const int order = grid.harmonic_order();
    const double a = grid.node(interval);
    const double b = a + grid.spacing();
    return collinearity_defect([&](double t) { return kernel(j, order, t); }, a, b);
}

} // namespace trigfund
