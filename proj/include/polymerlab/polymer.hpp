#ifndef POLYMERLAB_POLYMER_HPP
#define POLYMERLAB_POLYMER_HPP

#include <utility>
#include <vector>

#include "polymerlab/lattice.hpp"
#include "polymerlab/paths.hpp"
#include "polymerlab/signed_log.hpp"

namespace polymerlab::polymer {

using lattice::SquareLattice;

// values of f_u = Z_{u, .} over the whole lattice, one dynamic-programming
// sweep per source; solves the adjacency system A f_u = delta_u
struct PartitionTable {
    Vertex source;
    int n = 0;
    std::vector<SignedLog> values;  // site-indexed
    bool precision_warning = false;

    const SignedLog& at(const Vertex& v) const { return values[site_index(v, n)]; }
    std::string to_csv() const;
};

// k start and k terminal vertices, all distinct
struct EndpointSpec {
    std::vector<Vertex> starts;
    std::vector<Vertex> terminals;

    int k() const { return int(starts.size()); }
    void validate(int n) const;
};

// starts (1,1)..(1,k), terminals (n,n-k+1)..(n,n)
EndpointSpec corner_spec(int n, int k);

// product of edge weights and vertex weights along the path; the weight of a
// zero-length path at u is the loop weight w_u
SignedLog path_weight(const LatticePath& path, const SquareLattice& lat);

SignedLog partition_function(const SquareLattice& lat, Vertex u, Vertex v);

PartitionTable f_table(const SquareLattice& lat, Vertex u);

// signed sum over vertex-disjoint path families as a k x k determinant of
// point-to-point partition values, with per-row/column magnitude scaling
// pulled out before the small dense determinant
SignedLog lgv_determinant(const SquareLattice& lat, const EndpointSpec& spec);
SignedLog lgv_determinant(const std::vector<PartitionTable>& tables, const EndpointSpec& spec);

// corner-to-corner non-intersecting partition function of order k
SignedLog nonintersecting_Z(const SquareLattice& lat, int k);

// push each vertex weight into its incoming edges: w'_{u,v} = w_{u,v} w_v,
// loops become 1. Partition values change by the product of start weights.
SquareLattice transfer_weights_to_edges(const SquareLattice& lat);

// exhaustive oracles, refused above small size cutoffs
SignedLog brute_force_Z(const SquareLattice& lat, Vertex u, Vertex v);
SignedLog brute_force_Zk(const SquareLattice& lat, const EndpointSpec& spec);
std::pair<SignedLog, EndpointSpec> max_ZST(const SquareLattice& lat, int k);

inline constexpr int kBruteForceMaxSide = 6;
inline constexpr int kBruteForceMaxOrder = 3;

}  // namespace polymerlab::polymer

#endif
