#pragma once

#include <numbers>
#include <span>
#include <vector>

namespace trigfund {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Grid family. Type0 starts at 0; Type1 is shifted by half a spacing.
enum class GridKind { Type0 = 0, Type1 = 1 };

/// Sign exponent l of the grid family (0 or 1).
[[nodiscard]] constexpr int kind_tag(GridKind kind) noexcept {
    return kind == GridKind::Type0 ? 0 : 1;
}

/// N equally spaced nodes on [0, 2π), N odd and at least 3.
///
/// Node indices in the public interface are 1-based (j = 1..N):
///   Type0: t_j = 2π(j-1)/N
///   Type1: t_j = π(2j-1)/N
/// The harmonic order of the grid is n = (N-1)/2.
class UniformGrid {
public:
    /// Throws Error(EvenOrTooSmallN) unless n_nodes is odd and >= 3.
    UniformGrid(GridKind kind, int n_nodes);

    [[nodiscard]] GridKind kind() const noexcept { return kind_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] int harmonic_order() const noexcept { return (size() - 1) / 2; }
    [[nodiscard]] double spacing() const noexcept { return kTwoPi / size(); }

    /// Node t_j for 1-based j; throws Error(IndexOutOfRange).
    [[nodiscard]] double node(int j) const;

    /// All nodes, stored 0-based (nodes()[j-1] == node(j)).
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }

    /// Structural equality: same kind and node count.
    friend bool operator==(const UniformGrid& a, const UniformGrid& b) noexcept {
        return a.kind_ == b.kind_ && a.size() == b.size();
    }

private:
    GridKind kind_;
    std::vector<double> nodes_;
};

[[nodiscard]] UniformGrid make_grid(GridKind kind, int n_nodes);

/// Reduce t modulo 2π into [0, 2π). Throws Error(NonFiniteInput) for NaN/inf.
[[nodiscard]] double wrap_angle(double t);

/// Throws Error(IndexOutOfRange) unless 1 <= j <= grid.size().
void check_node_index(const UniformGrid& grid, int j);

} // namespace trigfund
