#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "trigfund/grid.hpp"
#include "trigfund/kernels.hpp"

namespace trigfund {

/// Function values f_j = f(t_j) attached to a grid.
class SampleSet {
public:
    /// Throws InvalidArgument on a length mismatch and NonFiniteInput on NaN/inf.
    SampleSet(UniformGrid grid, std::vector<double> values);

    /// Samples f at the grid nodes.
    template <class F>
    [[nodiscard]] static SampleSet from_function(const UniformGrid& grid, F&& f) {
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(grid.size()));
        for (double t : grid.nodes()) {
            values.push_back(f(t));
        }
        return SampleSet(grid, std::move(values));
    }

    [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    /// 1-based access.
    [[nodiscard]] double value(int j) const;

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

/// a0, a_k, b_k of the finite Fourier series; a and b have one entry per harmonic.
struct FourierCoeffs {
    double a0 = 0.0;
    std::vector<double> a;
    std::vector<double> b;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(a.size()); }
};

struct InterpPoly {};
struct InterpSpline {
    SplineShape shape;
};
struct LSPoly {
    int q = 0;
};
struct LSSpline {
    int q = 0;
    SplineShape shape;
};

using BasisSpec = std::variant<InterpPoly, InterpSpline, LSPoly, LSSpline>;

/// One of the four fundamental families bound to a grid.
class Basis {
public:
    /// Validates q and the spline shape; spline bases precompute H_k here.
    Basis(UniformGrid grid, BasisSpec spec);

    [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const BasisSpec& spec() const noexcept { return spec_; }

    /// Number of harmonics kept: q for LS bases, n for interpolation bases.
    [[nodiscard]] int harmonics() const noexcept { return harmonics_; }
    [[nodiscard]] bool is_interpolating() const noexcept;

    /// b_j(t), 1-based j.
    [[nodiscard]] double operator()(int j, double t) const;

    /// All N basis functions at t, 0-based.
    [[nodiscard]] std::vector<double> values(double t) const;

private:
    UniformGrid grid_;
    BasisSpec spec_;
    int harmonics_;
    std::optional<SplineKernel> spline_;
};

/// Σ_j f_j · b_j(t). Linear in the sample values by construction.
class Approximant {
public:
    Approximant(SampleSet samples, Basis basis);

    [[nodiscard]] const SampleSet& samples() const noexcept { return samples_; }
    [[nodiscard]] const Basis& basis() const noexcept { return basis_; }
    [[nodiscard]] const UniformGrid& grid() const noexcept { return samples_.grid(); }

    /// Throws NonFiniteInput for non-finite t.
    [[nodiscard]] double evaluate(double t) const;
    [[nodiscard]] std::vector<double> evaluate(std::span<const double> ts) const;

private:
    SampleSet samples_;
    Basis basis_;
};

[[nodiscard]] Approximant build(const SampleSet& samples, const BasisSpec& spec);

/// Discrete Fourier coefficients over the grid's own nodes:
///   a0  = (2/N) Σ f_j
///   a_k = (2/N) Σ f_j cos(k t_j)
///   b_k = (2/N) Σ f_j sin(k t_j),   k = 1..n
[[nodiscard]] FourierCoeffs fourier_coeffs(const SampleSet& samples);

/// a0/2 + Σ_{k<=q} (a_k cos kt + b_k sin kt). Throws BudgetTooLarge if q > coeffs.order().
[[nodiscard]] double partial_sum_eval(const FourierCoeffs& coeffs, int q, double t);

/// Copy of coeffs with every harmonic above q set to zero.
[[nodiscard]] FourierCoeffs truncate(const FourierCoeffs& coeffs, int q);

/// Σ_j [f_j - approx(t_j)]². Throws GridMismatch if the grids differ in kind or N.
[[nodiscard]] double residual_sse(const SampleSet& samples, const Approximant& approx);

} // namespace trigfund
