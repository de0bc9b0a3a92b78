#ifndef POLYMERLAB_GRID_HPP
#define POLYMERLAB_GRID_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

namespace polymerlab {

// Vertex of the n x n directed lattice, 1-based coordinates.
// Edges go right (x+1,y) or up (x,y+1).
struct Vertex {
    int x = 0;
    int y = 0;

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
    // lexicographic; used for canonical containers, not the lattice partial order
    friend bool operator<(const Vertex& a, const Vertex& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

// Strict partial order: a dominates b when a is strictly northwest of b.
inline bool northwest_of(const Vertex& a, const Vertex& b) { return a.y > b.y && a.x < b.x; }

inline bool in_grid(const Vertex& v, int n) { return v.x >= 1 && v.x <= n && v.y >= 1 && v.y <= n; }

inline int l1_distance(const Vertex& a, const Vertex& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Directed lattice edge; head is tail + (1,0) or (0,1).
struct GridEdge {
    Vertex tail;
    Vertex head;

    bool horizontal() const { return head.y == tail.y; }
    friend bool operator==(const GridEdge& a, const GridEdge& b) {
        return a.tail == b.tail && a.head == b.head;
    }
    friend bool operator<(const GridEdge& a, const GridEdge& b) {
        if (!(a.tail == b.tail)) return a.tail < b.tail;
        return a.head < b.head;
    }
};

inline GridEdge right_edge(const Vertex& v) { return {v, {v.x + 1, v.y}}; }
inline GridEdge up_edge(const Vertex& v) { return {v, {v.x, v.y + 1}}; }

// Row-major site index, sites scanned x-fastest.
inline int site_index(const Vertex& v, int n) { return (v.y - 1) * n + (v.x - 1); }
inline Vertex site_vertex(int idx, int n) { return {idx % n + 1, idx / n + 1}; }

// Canonical processing order: ascending x+y, ties by x. This is a topological
// order of the directed lattice, so adjacency matrices built with it are
// triangular.
class CanonicalOrder {
  public:
    explicit CanonicalOrder(int n);

    int n() const { return n_; }
    int size() const { return n_ * n_; }
    int rank_of(const Vertex& v) const { return rank_[site_index(v, n_)]; }
    const Vertex& vertex_at(int rank) const { return order_[rank]; }
    const std::vector<Vertex>& vertices() const { return order_; }

  private:
    int n_;
    std::vector<Vertex> order_;
    std::vector<int> rank_;
};

}  // namespace polymerlab

template <>
struct std::hash<polymerlab::Vertex> {
    size_t operator()(const polymerlab::Vertex& v) const noexcept {
        return std::hash<uint64_t>()((uint64_t(uint32_t(v.x)) << 32) | uint32_t(v.y));
    }
};

template <>
struct std::hash<polymerlab::GridEdge> {
    size_t operator()(const polymerlab::GridEdge& e) const noexcept {
        uint64_t a = (uint64_t(uint32_t(e.tail.x)) << 40) ^ (uint64_t(uint32_t(e.tail.y)) << 20) ^
                     (uint64_t(uint32_t(e.head.x)) << 10) ^ uint64_t(uint32_t(e.head.y));
        return std::hash<uint64_t>()(a);
    }
};

#endif
