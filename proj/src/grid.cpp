#include "polymerlab/grid.hpp"

#include <algorithm>

namespace polymerlab {

CanonicalOrder::CanonicalOrder(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("lattice side must be >= 1");
    order_.reserve(size_t(n) * n);
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) order_.push_back({x, y});
    std::sort(order_.begin(), order_.end(), [](const Vertex& a, const Vertex& b) {
        if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
        return a.x < b.x;
    });
    rank_.assign(size_t(n) * n, -1);
    for (int r = 0; r < int(order_.size()); ++r) rank_[site_index(order_[r], n)] = r;
}

}  // namespace polymerlab
