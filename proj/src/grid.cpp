#include "trigfund/grid.hpp"

#include <cmath>
#include <string>

#include "trigfund/error.hpp"

namespace trigfund {

UniformGrid::UniformGrid(GridKind kind, int n_nodes) : kind_(kind) {
    if (n_nodes < 3 || n_nodes % 2 == 0) {
        throw Error(ErrorCode::EvenOrTooSmallN,
                    "node count must be odd and >= 3, got " + std::to_string(n_nodes));
    }
    nodes_.resize(static_cast<std::size_t>(n_nodes));
    const double count = n_nodes;
    for (int i = 0; i < n_nodes; ++i) {
        nodes_[static_cast<std::size_t>(i)] =
            kind == GridKind::Type0 ? kTwoPi * i / count : kPi * (2 * i + 1) / count;
    }
}

double UniformGrid::node(int j) const {
    check_node_index(*this, j);
    return nodes_[static_cast<std::size_t>(j - 1)];
}

UniformGrid make_grid(GridKind kind, int n_nodes) { return UniformGrid(kind, n_nodes); }

double wrap_angle(double t) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::NonFiniteInput, "angle must be finite");
    }
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // r + 2π can round up to exactly 2π for tiny negative r.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

void check_node_index(const UniformGrid& grid, int j) {
    if (j < 1 || j > grid.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "node index " + std::to_string(j) +
                                                    " outside 1.." + std::to_string(grid.size()));
    }
}

} // namespace trigfund
