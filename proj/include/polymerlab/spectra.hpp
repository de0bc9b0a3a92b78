#ifndef POLYMERLAB_SPECTRA_HPP
#define POLYMERLAB_SPECTRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polymerlab/lattice.hpp"

namespace polymerlab::spectra {

using lattice::AdjacencyMatrix;
using lattice::SquareLattice;

struct DegenerateInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// full symmetric spectrum, sorted descending
std::vector<double> eigenvalues_hex(const AdjacencyMatrix& A);

// all singular values, sorted descending
std::vector<double> singular_values_square(const AdjacencyMatrix& A);

// smallest entry above the positivity cutoff 1e-12 * max|lambda|
double smallest_positive_eigenvalue(const std::vector<double>& spectrum);

// sum of logs of the k smallest positive entries
double bottom_k_log_product(const std::vector<double>& spectrum, int k);

// log sigma_i(A^{-1}) for i = 1..k, computed without forming the inverse:
// subspace iteration with the two triangular solves of the lattice adjacency,
// per-column log scaling, and Gram-Schmidt volume tracking. Works far past
// the magnitude range of doubles.
std::vector<double> bottom_log_singular_values(const SquareLattice& lat, int k,
                                               uint64_t seed = 0x5eed);

// residual-checked linear solve with the triangular adjacency; returns the
// scaled max-norm residual of A x = b
double solve_residual(const SquareLattice& lat, const std::vector<double>& b);

struct SpectralSummary {
    int n = 0;
    std::vector<double> eigenvalues;        // hex spectrum, descending (dense path)
    std::vector<double> singular_values;    // square dual, descending (dense path)
    double lambda_min_pos = 0;
    std::vector<double> bottom_k_log_products;  // index k-1: sum_{i<=k} log lambda_{bottom i}

    std::string to_json() const;
    std::string spectrum_csv() const;
};

// dense route when n^2 is small enough, iterative route otherwise
SpectralSummary spectral_summary(const SquareLattice& lat, int k_max);

}  // namespace polymerlab::spectra

#endif
