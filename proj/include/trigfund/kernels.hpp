#pragma once

#include <vector>

#include "trigfund/grid.hpp"

namespace trigfund {

inline constexpr int kDefaultTruncation = 1000;

/// Smoothness r and the number M of alias terms kept from the infinite
/// series in C_k and H_k. The same M truncates both, so the spline stays
/// exactly cardinal at the nodes for every M.
struct SplineShape {
    int r = 1;
    int truncation = kDefaultTruncation;

    /// Throws Error(InvalidArgument) unless r >= 1 and truncation >= 1.
    void validate() const;

    friend bool operator==(const SplineShape&, const SplineShape&) = default;
};

/// Throws unless 0 <= q <= grid.harmonic_order() (BudgetTooLarge above,
/// InvalidArgument below).
void check_budget(const UniformGrid& grid, int q);

/// Fundamental interpolation polynomial tm_k(t) = (1/N)[1 + 2 Σ_{i=1..n} cos(i(t - t_k))].
[[nodiscard]] double tm_eval(const UniformGrid& grid, int k, double t);

/// Fundamental LS polynomial φ_{j,q}(t): tm with the harmonic sum cut at q.
[[nodiscard]] double phi_ls_eval(const UniformGrid& grid, int j, int q, double t);

/// Attenuation factor [sin(πk/N)/k]^(1+r). The power is an integer power,
/// so the sign of the base survives when 1+r is odd.
[[nodiscard]] double sigma_factor(long k, int r, int n_nodes);

/// Numerator series C_k(t) of the spline kernel anchored at node j.
[[nodiscard]] double series_C(const UniformGrid& grid, int k, const SplineShape& shape, int j,
                              double t);

/// Denominator constant H_k; throws Error(DegenerateDenominator) when |H_k| < 1e-12.
[[nodiscard]] double series_H(GridKind kind, int k, const SplineShape& shape, int n_nodes);

/// Fundamental interpolation spline ts_j(t).
[[nodiscard]] double ts_eval(const UniformGrid& grid, int j, const SplineShape& shape, double t);

/// Fundamental LS spline ts_{j,q}(t).
[[nodiscard]] double ts_ls_eval(const UniformGrid& grid, int j, int q, const SplineShape& shape,
                                double t);

/// Spline kernel with H_1..H_n precomputed for one (grid, shape) pair.
///
/// Every spline basis function on a uniform grid is the same profile
/// shifted to its node, so evaluation only needs the phase t - t_j.
class SplineKernel {
public:
    SplineKernel(UniformGrid grid, SplineShape shape);

    [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const SplineShape& shape() const noexcept { return shape_; }
    [[nodiscard]] double denominator(int k) const { return denominators_.at(static_cast<std::size_t>(k - 1)); }

    /// ts_{j,q}(t); q = harmonic_order() gives the interpolation spline.
    [[nodiscard]] double operator()(int j, int q, double t) const;

    /// Profile value at a phase already reduced to [0, 2π).
    [[nodiscard]] double profile(int q, double phase) const;

private:
    struct Term {
        double frequency;
        double weight; // ±σ_frequency / H_k
    };

    UniformGrid grid_;
    SplineShape shape_;
    std::vector<double> denominators_;
    // Terms of C_k / H_k for harmonic k live in [offsets_[k-1], offsets_[k]).
    std::vector<Term> terms_;
    std::vector<std::size_t> offsets_;
};

} // namespace trigfund
