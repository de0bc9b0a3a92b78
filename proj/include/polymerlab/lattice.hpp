#ifndef POLYMERLAB_LATTICE_HPP
#define POLYMERLAB_LATTICE_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "polymerlab/grid.hpp"

namespace polymerlab::lattice {

class HexLattice;

// Directed n x n lattice with a loop on every vertex. Loop weight w_u and the
// diagonal adjacency entry a_u = 1/w_u are stored side by side: the pair is
// fixed at construction so the hex <-> square conversions below are exact
// involutions on the stored doubles.
class SquareLattice {
  public:
    SquareLattice(int n, std::vector<double> loops, std::vector<double> right,
                  std::vector<double> up);

    int n() const { return n_; }
    int vertex_count() const { return n_ * n_; }
    int edge_count() const { return 2 * n_ * (n_ - 1); }

    double loop(const Vertex& v) const { return loops_[site_index(v, n_)]; }
    double diag(const Vertex& v) const { return diag_[site_index(v, n_)]; }

    bool has_right(const Vertex& v) const { return v.x < n_; }
    bool has_up(const Vertex& v) const { return v.y < n_; }
    double right(const Vertex& v) const { return right_[(v.y - 1) * (n_ - 1) + (v.x - 1)]; }
    double up(const Vertex& v) const { return up_[(v.y - 1) * n_ + (v.x - 1)]; }

    bool has_edge(const Vertex& u, const Vertex& v) const;
    double edge_weight(const Vertex& u, const Vertex& v) const;

    const CanonicalOrder& order() const { return order_; }
    const std::vector<double>& loops() const { return loops_; }
    const std::vector<double>& right_edges() const { return right_; }
    const std::vector<double>& up_edges() const { return up_; }

  private:
    friend SquareLattice square_from_diag(int, std::vector<double>, std::vector<double>,
                                          std::vector<double>);
    friend SquareLattice build_square_from_hex(const HexLattice&);
    int n_;
    std::vector<double> loops_;
    std::vector<double> diag_;
    std::vector<double> right_;
    std::vector<double> up_;
    CanonicalOrder order_;
};

// builds from adjacency diagonal entries instead of loop weights
SquareLattice square_from_diag(int n, std::vector<double> diag, std::vector<double> right,
                               std::vector<double> up);

// Bipartite graph on vertex classes A and B (one pair per lattice site) whose
// horizontal edges form a perfect matching. Contracting the matching yields
// the directed square lattice above; both directions are provided.
class HexLattice {
  public:
    HexLattice(int n, std::vector<double> blue, std::vector<double> red_right,
               std::vector<double> red_up);

    int n() const { return n_; }
    int vertex_count() const { return 2 * n_ * n_; }
    int blue_count() const { return n_ * n_; }
    int red_count() const { return 2 * n_ * (n_ - 1); }

    // blue edge (a_i, b_i); weight equals the dual loop's adjacency entry
    double blue(const Vertex& site) const { return blue_[site_index(site, n_)]; }
    // red edge (a_u, b_v) exists iff the square lattice has the edge u -> v
    double red(const Vertex& u, const Vertex& v) const;

    const std::vector<double>& blues() const { return blue_; }
    const std::vector<double>& red_right() const { return red_right_; }
    const std::vector<double>& red_up() const { return red_up_; }

    // per-level hexagon counts of the rhombus drawing; level k of 2n-1 holds
    // min(k, 2n-k-2) hexagons
    std::vector<int> level_hexagon_counts() const;

  private:
    friend HexLattice build_hex_from_square(const SquareLattice&);
    friend SquareLattice build_square_from_hex(const HexLattice&);
    int n_;
    std::vector<double> blue_;
    std::vector<double> red_right_;
    std::vector<double> red_up_;
    // dual loop weights 1/blue, carried so hex<->square round trips return
    // the original doubles instead of twice-rounded reciprocals
    std::vector<double> dual_loops_;
};

enum class MatrixStorage { dense, sparse, automatic };

// Adjacency matrix in the canonical vertex order; dense for small instances,
// row-compressed otherwise.
struct AdjacencyMatrix {
    int dim = 0;
    bool symmetric = false;
    bool is_dense = true;
    Eigen::MatrixXd dense;
    std::vector<std::vector<std::pair<int, double>>> rows;  // sparse: (col, value) per row

    double norm_estimate() const;
};

SquareLattice build_square_lattice(int n, const std::vector<double>& loops,
                                   const std::vector<double>& right, const std::vector<double>& up);

HexLattice build_hex_from_square(const SquareLattice& sq);
SquareLattice build_square_from_hex(const HexLattice& hex);

// n^2 x n^2, upper triangular in the canonical order
AdjacencyMatrix square_adjacency(const SquareLattice& sq,
                                 MatrixStorage storage = MatrixStorage::automatic);
// 2n^2 x 2n^2 symmetric matrix with block form [[0, A~],[A~^T, 0]]
AdjacencyMatrix hex_adjacency(const HexLattice& hex,
                              MatrixStorage storage = MatrixStorage::automatic);

std::string lattice_to_json(const SquareLattice& sq);
SquareLattice lattice_from_json(const std::string& text);

inline constexpr int kDenseDimensionCutoff = 4096;

}  // namespace polymerlab::lattice

#endif
