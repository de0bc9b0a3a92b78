#include "polymerlab/polymer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace polymerlab::polymer {

void EndpointSpec::validate(int n) const {
    if (starts.size() != terminals.size()) throw std::invalid_argument("spec sizes disagree");
    if (int(starts.size()) > n) throw std::out_of_range("order k exceeds lattice side");
    std::unordered_set<Vertex> s, t;
    for (const Vertex& v : starts) {
        if (!in_grid(v, n)) throw std::invalid_argument("start outside grid");
        if (!s.insert(v).second) throw std::invalid_argument("starts are not distinct");
    }
    for (const Vertex& v : terminals) {
        if (!in_grid(v, n)) throw std::invalid_argument("terminal outside grid");
        if (!t.insert(v).second) throw std::invalid_argument("terminals are not distinct");
    }
}

EndpointSpec corner_spec(int n, int k) {
    EndpointSpec spec;
    for (int i = 1; i <= k; ++i) {
        spec.starts.push_back({1, i});
        spec.terminals.push_back({n, n - k + i});
    }
    spec.validate(n);
    return spec;
}

SignedLog path_weight(const LatticePath& path, const SquareLattice& lat) {
    SignedLog w = SignedLog::one();
    const auto& verts = path.verts();
    for (const Vertex& v : verts) {
        if (!in_grid(v, lat.n())) throw std::invalid_argument("path leaves the lattice");
        w *= SignedLog::from_value(lat.loop(v));
    }
    for (size_t i = 1; i < verts.size(); ++i)
        w *= SignedLog::from_value(lat.edge_weight(verts[i - 1], verts[i]));
    return w;
}

PartitionTable f_table(const SquareLattice& lat, Vertex u) {
    int n = lat.n();
    if (!in_grid(u, n)) throw std::invalid_argument("source outside grid");
    PartitionTable table;
    table.source = u;
    table.n = n;
    table.values.assign(size_t(n) * n, SignedLog::zero());
    table.values[site_index(u, n)] = SignedLog::from_value(lat.loop(u));
    for (int rank = lat.order().rank_of(u) + 1; rank < n * n; ++rank) {
        const Vertex v = lat.order().vertex_at(rank);
        if (v.x < u.x || v.y < u.y) continue;
        SignedLogSum sum;
        if (v.x > u.x && v.x > 1) {
            const Vertex w{v.x - 1, v.y};
            sum.add(table.values[site_index(w, n)] * SignedLog::from_value(lat.right(w)));
        }
        if (v.y > u.y && v.y > 1) {
            const Vertex w{v.x, v.y - 1};
            sum.add(table.values[site_index(w, n)] * SignedLog::from_value(lat.up(w)));
        }
        table.values[site_index(v, n)] = sum.total() * SignedLog::from_value(lat.loop(v));
        table.precision_warning |= sum.precision_warning();
    }
    return table;
}

SignedLog partition_function(const SquareLattice& lat, Vertex u, Vertex v) {
    if (!in_grid(u, lat.n()) || !in_grid(v, lat.n()))
        throw std::invalid_argument("vertex outside grid");
    if (v.x < u.x || v.y < u.y) return SignedLog::zero();
    return f_table(lat, u).at(v);
}

std::string PartitionTable::to_csv() const {
    std::string out = "x,y,sign,logmag\n";
    char buf[96];
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) {
            const SignedLog& v = values[site_index({x, y}, n)];
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g\n", x, y, v.sign, v.logmag);
            out += buf;
        }
    return out;
}

SignedLog lgv_determinant(const std::vector<PartitionTable>& tables, const EndpointSpec& spec) {
    int k = spec.k();
    if (int(tables.size()) != k) throw std::invalid_argument("need one table per start");

    // peel per-row then per-column max log magnitudes before the dense k x k
    // determinant; entries span e^{Theta(n)} ranges otherwise
    Eigen::MatrixXd m(k, k);
    double log_scale = 0;
    for (int i = 0; i < k; ++i) {
        double row_max = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            const SignedLog& z = tables[i].at(spec.terminals[j]);
            if (z.sign != 0) row_max = std::max(row_max, z.logmag);
        }
        if (std::isinf(row_max)) return SignedLog::zero();
        log_scale += row_max;
        for (int j = 0; j < k; ++j) {
            const SignedLog& z = tables[i].at(spec.terminals[j]);
            m(i, j) = z.sign == 0 ? 0.0 : z.sign * std::exp(z.logmag - row_max);
        }
    }
    for (int j = 0; j < k; ++j) {
        double col_max = m.col(j).cwiseAbs().maxCoeff();
        if (col_max == 0.0) return SignedLog::zero();
        log_scale += std::log(col_max);
        m.col(j) /= col_max;
    }
    double det = m.determinant();
    if (det == 0.0) return SignedLog::zero();
    return SignedLog::from_log(det > 0 ? 1 : -1, std::log(std::fabs(det)) + log_scale);
}

SignedLog lgv_determinant(const SquareLattice& lat, const EndpointSpec& spec) {
    spec.validate(lat.n());
    std::vector<PartitionTable> tables;
    tables.reserve(spec.k());
    for (const Vertex& s : spec.starts) tables.push_back(f_table(lat, s));
    return lgv_determinant(tables, spec);
}

SignedLog nonintersecting_Z(const SquareLattice& lat, int k) {
    if (k < 1 || k > lat.n()) throw std::out_of_range("order k must lie in [1, n]");
    return lgv_determinant(lat, corner_spec(lat.n(), k));
}

SquareLattice transfer_weights_to_edges(const SquareLattice& lat) {
    int n = lat.n();
    std::vector<double> loops(size_t(n) * n, 1.0);
    std::vector<double> right(lat.right_edges()), up(lat.up_edges());
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x < n; ++x)
            right[(y - 1) * (n - 1) + (x - 1)] *= lat.loop({x + 1, y});
    for (int y = 1; y < n; ++y)
        for (int x = 1; x <= n; ++x) up[(y - 1) * n + (x - 1)] *= lat.loop({x, y + 1});
    return SquareLattice(n, std::move(loops), std::move(right), std::move(up));
}

namespace {

void check_brute_force_size(const SquareLattice& lat, int k) {
    if (lat.n() > kBruteForceMaxSide)
        throw std::invalid_argument("exhaustive oracle refused: lattice side exceeds " +
                                    std::to_string(kBruteForceMaxSide));
    if (k > kBruteForceMaxOrder)
        throw std::invalid_argument("exhaustive oracle refused: order exceeds " +
                                    std::to_string(kBruteForceMaxOrder));
}

uint64_t vertex_bit(const Vertex& v, int n) { return uint64_t(1) << site_index(v, n); }

uint64_t path_mask(const LatticePath& p, int n) {
    uint64_t m = 0;
    for (const Vertex& v : p.verts()) m |= vertex_bit(v, n);
    return m;
}

}  // namespace

SignedLog brute_force_Z(const SquareLattice& lat, Vertex u, Vertex v) {
    check_brute_force_size(lat, 1);
    if (v.x < u.x || v.y < u.y) return SignedLog::zero();
    SignedLogSum sum;
    for (const LatticePath& p : enumerate_paths(u, v)) sum.add(path_weight(p, lat));
    return sum.total();
}

SignedLog brute_force_Zk(const SquareLattice& lat, const EndpointSpec& spec) {
    spec.validate(lat.n());
    int k = spec.k();
    check_brute_force_size(lat, k);
    int n = lat.n();

    // paths and their weights per (start, terminal) pair
    std::vector<std::vector<std::vector<LatticePath>>> paths(k);
    for (int i = 0; i < k; ++i) {
        paths[i].resize(k);
        for (int j = 0; j < k; ++j) paths[i][j] = enumerate_paths(spec.starts[i], spec.terminals[j]);
    }

    SignedLogSum total;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sign = -sign;

        // depth-first over path choices with a vertex-occupancy mask
        auto rec = [&](auto&& self, int i, uint64_t used, SignedLog acc) -> void {
            if (i == k) {
                total.add(sign > 0 ? acc : acc.negated());
                return;
            }
            for (const LatticePath& p : paths[i][perm[i]]) {
                uint64_t m = path_mask(p, n);
                if (m & used) continue;
                self(self, i + 1, used | m, acc * path_weight(p, lat));
            }
        };
        rec(rec, 0, 0, SignedLog::one());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total.total();
}

std::pair<SignedLog, EndpointSpec> max_ZST(const SquareLattice& lat, int k) {
    check_brute_force_size(lat, k);
    int n = lat.n();
    int sites = n * n;

    std::vector<PartitionTable> tables;
    tables.reserve(sites);
    for (int i = 0; i < sites; ++i) tables.push_back(f_table(lat, site_vertex(i, n)));

    // |Z| is invariant under reordering either endpoint sequence, so scan
    // increasing index combinations only
    std::vector<int> scomb(k);
    for (int i = 0; i < k; ++i) scomb[i] = i;
    auto next_comb = [&](std::vector<int>& c) -> bool {
        int i = k - 1;
        while (i >= 0 && c[i] == sites - k + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
    };

    SignedLog best = SignedLog::zero();
    EndpointSpec best_spec;
    do {
        EndpointSpec spec;
        std::vector<PartitionTable> subset;
        subset.reserve(k);
        for (int i = 0; i < k; ++i) {
            spec.starts.push_back(site_vertex(scomb[i], n));
            subset.push_back(tables[scomb[i]]);
        }
        std::vector<int> tc(k);
        for (int i = 0; i < k; ++i) tc[i] = i;
        do {
            spec.terminals.clear();
            for (int i = 0; i < k; ++i) spec.terminals.push_back(site_vertex(tc[i], n));
            SignedLog z = lgv_determinant(subset, spec);
            if (z.sign != 0 && (best.sign == 0 || z.logmag > best.logmag)) {
                best = z;
                best_spec = spec;
            }
        } while (next_comb(tc));
    } while (next_comb(scomb));
    return {best, best_spec};
}

}  // namespace polymerlab::polymer
