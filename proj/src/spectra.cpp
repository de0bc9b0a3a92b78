#include "polymerlab/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "polymerlab/rng.hpp"

namespace polymerlab::spectra {

namespace {

// Triangular action of the square adjacency in canonical rank order: row u
// holds the diagonal entry and -w(u,v) for the two outgoing edges. Solves are
// plain substitutions; vectors are kept unit-norm with a separate log scale
// because solution magnitudes grow like exp(c n).
struct TriangularOps {
    const SquareLattice& lat;
    int dim;
    std::vector<double> diag;              // by rank
    std::vector<std::array<int, 2>> succ;  // successor ranks, -1 if absent
    std::vector<std::array<double, 2>> w;  // off-diagonal entries -w(u,v)

    explicit TriangularOps(const SquareLattice& l) : lat(l), dim(l.vertex_count()) {
        const auto& ord = lat.order();
        diag.resize(dim);
        succ.assign(dim, {-1, -1});
        w.assign(dim, {0, 0});
        for (int r = 0; r < dim; ++r) {
            Vertex u = ord.vertex_at(r);
            diag[r] = lat.diag(u);
            if (lat.has_right(u)) {
                succ[r][0] = ord.rank_of({u.x + 1, u.y});
                w[r][0] = -lat.right(u);
            }
            if (lat.has_up(u)) {
                succ[r][1] = ord.rank_of({u.x, u.y + 1});
                w[r][1] = -lat.up(u);
            }
        }
    }

    // x := A^{-1} x (back substitution) with incremental rescaling; adds the
    // applied log scale to log_scale
    void solve_upper(Eigen::VectorXd& x, double& log_scale) const {
        for (int r = dim - 1; r >= 0; --r) {
            double s = x[r];
            if (succ[r][0] >= 0) s -= w[r][0] * x[succ[r][0]];
            if (succ[r][1] >= 0) s -= w[r][1] * x[succ[r][1]];
            x[r] = s / diag[r];
            double m = std::fabs(x[r]);
            if (m > 1e140) {
                x *= 1e-140;
                log_scale += std::log(1e140);
            }
        }
    }

    // x := A^{-T} x (forward substitution)
    void solve_lower(Eigen::VectorXd& x, double& log_scale) const {
        // A^T column access equals row access of A; process ranks ascending
        // using the running solution of earlier ranks
        for (int r = 0; r < dim; ++r) {
            double s = x[r];
            // contributions from predecessors u with edge u -> r arrive when
            // their rows were processed; accumulate on the fly instead
            x[r] = s / diag[r];
            double m = std::fabs(x[r]);
            if (m > 1e140) {
                x *= 1e-140;
                log_scale += std::log(1e140);
                m = std::fabs(x[r]);
            }
            if (succ[r][0] >= 0) x[succ[r][0]] -= w[r][0] * x[r];
            if (succ[r][1] >= 0) x[succ[r][1]] -= w[r][1] * x[r];
        }
    }

    // y := A x without scaling (entries O(1) relative to x)
    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const {
        Eigen::VectorXd y(dim);
        for (int r = 0; r < dim; ++r) {
            double s = diag[r] * x[r];
            if (succ[r][0] >= 0) s += w[r][0] * x[succ[r][0]];
            if (succ[r][1] >= 0) s += w[r][1] * x[succ[r][1]];
            y[r] = s;
        }
        return y;
    }
};

std::vector<double> sorted_descending(Eigen::VectorXd v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

}  // namespace

std::vector<double> eigenvalues_hex(const AdjacencyMatrix& A) {
    if (!A.symmetric) throw std::invalid_argument("hex spectrum needs a symmetric matrix");
    if (!A.is_dense)
        throw std::invalid_argument("dense storage required for the full spectrum");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.dense, Eigen::EigenvaluesOnly);
    return sorted_descending(es.eigenvalues());
}

std::vector<double> singular_values_square(const AdjacencyMatrix& A) {
    if (!A.is_dense) throw std::invalid_argument("dense storage required for full SVD");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.dense);
    std::vector<double> out = sorted_descending(svd.singularValues());
    if (out.empty() || out.back() < 1e-300)
        throw DegenerateInstanceError("numerically singular adjacency");
    return out;
}

double smallest_positive_eigenvalue(const std::vector<double>& spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("empty spectrum");
    double scale = 0;
    for (double v : spectrum) scale = std::max(scale, std::fabs(v));
    double cutoff = 1e-12 * scale;
    double best = 0;
    bool found = false;
    for (double v : spectrum)
        if (v > cutoff && (!found || v < best)) {
            best = v;
            found = true;
        }
    if (!found) throw DegenerateInstanceError("no positive eigenvalue above cutoff");
    return best;
}

double bottom_k_log_product(const std::vector<double>& spectrum, int k) {
    double scale = 0;
    for (double v : spectrum) scale = std::max(scale, std::fabs(v));
    double cutoff = 1e-12 * scale;
    std::vector<double> pos;
    for (double v : spectrum)
        if (v > cutoff) pos.push_back(v);
    if (int(pos.size()) < k) throw std::out_of_range("fewer than k positive eigenvalues");
    std::sort(pos.begin(), pos.end());
    double s = 0;
    for (int i = 0; i < k; ++i) s += std::log(pos[i]);
    return s;
}

std::vector<double> bottom_log_singular_values(const SquareLattice& lat, int k, uint64_t seed) {
    TriangularOps ops(lat);
    int dim = ops.dim;
    if (k < 1 || k > dim) throw std::out_of_range("bad subspace size");
    int block = std::min(dim, k + 1);  // one guard vector sharpens the last rate

    rng::Stream stream(rng::derive_key(seed, 0xb10c));
    std::vector<Eigen::VectorXd> q(block, Eigen::VectorXd(dim));
    for (auto& col : q) {
        for (int i = 0; i < dim; ++i) col[i] = stream.next_normal();
        col.normalize();
    }
    for (int j = 0; j < block; ++j) {
        for (int i = 0; i < j; ++i) q[j] -= q[i].dot(q[j]) * q[i];
        q[j].normalize();
    }

    // per-column growth rates converge geometrically to log mu_j with
    // mu_j = sigma_j(A^{-1})^2; stop when the extrapolated remainder of the
    // first k rates is negligible. Polymer-type spectra separate like
    // exp(n^{1/3}) so the loop is short except on nearly flat instances.
    std::vector<double> rates(block, 0), prev(block, 0), prev_delta(block, 1e300);
    const int max_iter = 30000;
    int stable = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::vector<double> scale(block, 0);
        for (int j = 0; j < block; ++j) {
            ops.solve_lower(q[j], scale[j]);
            ops.solve_upper(q[j], scale[j]);
        }
        for (int j = 0; j < block; ++j) {
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i < j; ++i) q[j] -= q[i].dot(q[j]) * q[i];
            double nrm = q[j].norm();
            if (nrm == 0.0 || !std::isfinite(nrm))
                throw DegenerateInstanceError("subspace collapsed");
            rates[j] = std::log(nrm) + scale[j];
            q[j] /= nrm;
        }
        bool done = iter > 0;
        for (int j = 0; j < k && done; ++j) {
            double delta = std::fabs(rates[j] - prev[j]);
            double ratio = prev_delta[j] > 0 ? delta / prev_delta[j] : 0.0;
            double remaining = ratio < 1.0 ? delta * ratio / (1.0 - ratio) : delta;
            if (std::max(delta, remaining) > 1e-11 * std::max(1.0, std::fabs(rates[j])))
                done = false;
        }
        for (int j = 0; j < block; ++j) {
            prev_delta[j] = std::fabs(rates[j] - prev[j]);
            prev[j] = rates[j];
        }
        if (done) {
            if (++stable >= 2) break;
        } else {
            stable = 0;
        }
    }
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) out[j] = 0.5 * rates[j];
    return out;
}

double solve_residual(const SquareLattice& lat, const std::vector<double>& b) {
    TriangularOps ops(lat);
    if (int(b.size()) != ops.dim) throw std::invalid_argument("rhs size mismatch");
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(b.data(), b.size());
    double log_scale = 0;
    ops.solve_upper(x, log_scale);
    // x now holds the solution times e^{-log_scale}; compare against b at the
    // same scale so the residual stays representable
    Eigen::VectorXd r = ops.multiply(x);
    Eigen::VectorXd scaled_b =
        Eigen::Map<const Eigen::VectorXd>(b.data(), b.size()) * std::exp(-log_scale);
    double denom = std::max(std::exp(-log_scale), x.cwiseAbs().maxCoeff());
    return (r - scaled_b).cwiseAbs().maxCoeff() / denom;
}

std::string SpectralSummary::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = n;
    j["eigenvalues"] = eigenvalues;
    j["singular_values"] = singular_values;
    j["lambda_min_pos"] = lambda_min_pos;
    j["bottom_k_log_products"] = bottom_k_log_products;
    return j.dump();
}

std::string SpectralSummary::spectrum_csv() const {
    std::string out = "index,value\n";
    char buf[64];
    const auto& src = eigenvalues.empty() ? singular_values : eigenvalues;
    for (size_t i = 0; i < src.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, src[i]);
        out += buf;
    }
    return out;
}

SpectralSummary spectral_summary(const SquareLattice& lat, int k_max) {
    SpectralSummary s;
    s.n = lat.n();
    int dim = lat.vertex_count();
    if (dim <= lattice::kDenseDimensionCutoff) {
        auto hexA = lattice::hex_adjacency(lattice::build_hex_from_square(lat),
                                           lattice::MatrixStorage::dense);
        s.eigenvalues = eigenvalues_hex(hexA);
        auto sqA = lattice::square_adjacency(lat, lattice::MatrixStorage::dense);
        s.singular_values = singular_values_square(sqA);
        s.lambda_min_pos = smallest_positive_eigenvalue(s.eigenvalues);
        for (int k = 1; k <= k_max; ++k)
            s.bottom_k_log_products.push_back(bottom_k_log_product(s.eigenvalues, k));
    } else {
        std::vector<double> logs = bottom_log_singular_values(lat, k_max);
        // bottom positive hex eigenvalues equal the bottom singular values of
        // the dual; log lambda_{bottom i} = -log sigma_i(A^{-1})
        s.lambda_min_pos = std::exp(-logs[0]);
        double acc = 0;
        for (int k = 1; k <= k_max; ++k) {
            acc += -logs[k - 1];
            s.bottom_k_log_products.push_back(acc);
        }
    }
    return s;
}

}  // namespace polymerlab::spectra
