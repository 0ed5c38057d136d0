#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "trigfund/approximants.hpp"
#include "trigfund/error.hpp"
#include "trigfund/grid.hpp"
#include "trigfund/kernels.hpp"

namespace trigfund {

inline constexpr int kDefaultQuadraturePoints = 4096;

/// Rectangle rule (2π/P) Σ_{i<P} f(2πi/P) over one period.
///
/// Exact for trigonometric polynomials of order below P, so spectrally
/// accurate for smooth periodic integrands.
template <class F>
[[nodiscard]] double periodic_quadrature(F&& integrand, int num_points) {
    if (num_points < 16) {
        throw Error(ErrorCode::InvalidArgument,
                    "quadrature needs at least 16 points, got " + std::to_string(num_points));
    }
    double sum = 0.0;
    for (int i = 0; i < num_points; ++i) {
        sum += integrand(kTwoPi * i / num_points);
    }
    return kTwoPi * sum / num_points;
}

enum class GramNormalization { ContinuousScaled, Discrete };

/// Dense N×N inner-product matrix, row-major.
class GramMatrix {
public:
    GramMatrix(int size, GramNormalization normalization);

    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] GramNormalization normalization() const noexcept { return normalization_; }

    /// 1-based.
    [[nodiscard]] double operator()(int i, int j) const;
    double& at(int i, int j);

    [[nodiscard]] const std::vector<double>& entries() const noexcept { return entries_; }

    /// max |G - I| over all entries.
    [[nodiscard]] double max_deviation_from_identity() const;
    [[nodiscard]] double max_off_diagonal() const;
    [[nodiscard]] double max_asymmetry() const;

private:
    int size_;
    GramNormalization normalization_;
    std::vector<double> entries_;
};

/// (N/2π) ∫ b_i b_j dt by periodic_quadrature. For spline bases the
/// integrand carries harmonics up to M·N + n, so num_points must exceed
/// 2(M·N + n) for the result to be exact.
[[nodiscard]] GramMatrix continuous_gram(const UniformGrid& grid, const BasisSpec& basis,
                                         int num_points = kDefaultQuadraturePoints);

/// Σ_k b_i(t_k) b_j(t_k) over the grid nodes.
[[nodiscard]] GramMatrix discrete_gram(const UniformGrid& grid, const BasisSpec& basis);

/// Brute-force least squares fit of {1, cos kt, sin kt}_{k<=q} to the samples.
///
/// Assembles and solves the (2q+1)×(2q+1) normal equations densely, with no
/// use of discrete orthogonality. The result has the grid's full order n;
/// harmonics above q are zero. Throws SingularSystem if the system is
/// numerically singular.
[[nodiscard]] FourierCoeffs ls_oracle(const SampleSet& samples, int q);

/// |f(a + w/2) - (f(a + w/4) + f(a + 3w/4))/2| with w = b - a.
template <class F>
[[nodiscard]] double collinearity_defect(F&& f, double a, double b) {
    const double w = b - a;
    const double first = f(a + 0.25 * w);
    const double mid = f(a + 0.5 * w);
    const double last = f(a + 0.75 * w);
    return std::abs(mid - 0.5 * (first + last));
}

/// Collinearity defect of ts_j over grid interval [t_i, t_{i+1}], 1-based i;
/// interval N wraps to [t_N, t_1 + 2π].
[[nodiscard]] double collinearity_defect(const UniformGrid& grid, int j, const SplineShape& shape,
                                         int interval);

} // namespace trigfund
