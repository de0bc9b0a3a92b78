#ifndef POLYMERLAB_PATHS_HPP
#define POLYMERLAB_PATHS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "polymerlab/grid.hpp"
#include "polymerlab/rng.hpp"

namespace polymerlab {

// Monotone up-right path, stored as its vertex sequence. Zero-length paths
// (a single vertex) are legitimate values; the surgery routines create them.
class LatticePath {
  public:
    LatticePath() = default;
    static LatticePath single(Vertex v) { return LatticePath(std::vector<Vertex>{v}); }
    explicit LatticePath(std::vector<Vertex> verts);

    bool empty() const { return verts_.empty(); }
    size_t edge_count() const { return verts_.empty() ? 0 : verts_.size() - 1; }
    Vertex start() const { return verts_.front(); }
    Vertex end() const { return verts_.back(); }
    const std::vector<Vertex>& verts() const { return verts_; }
    bool contains(const Vertex& v) const;
    std::vector<GridEdge> edges() const;

    // vertices strictly between two turns count: enter-left/exit-up or
    // enter-below/exit-right
    int turn_count() const;

    LatticePath suffix_from(size_t index) const;
    LatticePath prefix_to(size_t index) const;
    friend LatticePath concatenate(const LatticePath& a, const LatticePath& b);

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.verts_ == b.verts_;
    }

  private:
    std::vector<Vertex> verts_;
};

// k paths plus endpoint bookkeeping: path i runs from starts()[i] to
// terminals()[sigma(i)]. Reorderings permute paths and sigma together; the
// terminal label sequence stays fixed.
class PathTuple {
  public:
    PathTuple() = default;
    PathTuple(std::vector<LatticePath> paths, std::vector<Vertex> terminals,
              std::vector<int> sigma);
    // terminal labels in path order, sigma = identity
    static PathTuple from_paths(std::vector<LatticePath> paths);

    int k() const { return int(paths_.size()); }
    const LatticePath& path(int i) const { return paths_[i]; }
    const std::vector<LatticePath>& paths() const { return paths_; }
    Vertex start(int i) const { return paths_[i].start(); }
    Vertex end(int i) const { return paths_[i].end(); }
    std::vector<Vertex> starts() const;
    const std::vector<Vertex>& terminals() const { return terminals_; }
    int sigma(int i) const { return sigma_[i]; }
    const std::vector<int>& sigma() const { return sigma_; }
    int sigma_sign() const;

    void set_path(int i, LatticePath p);              // endpoints must be unchanged
    void move_endpoints(int i, LatticePath p);        // rewrites terminal label sigma(i)
    void apply_order(const std::vector<int>& perm);   // paths_[i] = old[perm[i]]

    // structural checks: monotone paths in the grid, distinct starts,
    // distinct terminals, labels consistent
    void validate(int n) const;

    std::set<GridEdge> edge_set() const;
    std::map<GridEdge, int> edge_multiset() const;
    bool vertex_disjoint() const;
    bool covers_vertex(const Vertex& v, int skip_index = -1) const;
    int paths_through(const Vertex& v) const;

  private:
    std::vector<LatticePath> paths_;
    std::vector<Vertex> terminals_;
    std::vector<int> sigma_;
};

// all monotone paths u -> v (empty when unreachable); count explodes
// combinatorially, callers guard sizes
std::vector<LatticePath> enumerate_paths(Vertex u, Vertex v);

// path count binomial(dx+dy, dx) as double
double count_paths(Vertex u, Vertex v);

// uniform random monotone path between fixed endpoints
LatticePath random_path(Vertex u, Vertex v, rng::Stream& stream);

// rejection-sample a vertex-disjoint tuple with random endpoints; starts and
// terminals each distinct
PathTuple random_disjoint_tuple(int n, int k, rng::Stream& stream);

// edge set decomposed greedily into maximal monotone paths
std::vector<LatticePath> decompose_into_paths(const std::set<GridEdge>& edges);

}  // namespace polymerlab

#endif
