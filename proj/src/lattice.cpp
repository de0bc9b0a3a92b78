#include "polymerlab/lattice.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace polymerlab::lattice {

namespace {

void check_sizes(int n, const std::vector<double>& loops, const std::vector<double>& right,
                 const std::vector<double>& up) {
    if (n < 1) throw std::invalid_argument("lattice side must be >= 1");
    size_t nn = size_t(n) * n;
    if (loops.size() != nn) throw std::invalid_argument("loop weight array has wrong size");
    if (right.size() != size_t(n) * (n - 1))
        throw std::invalid_argument("right edge array has wrong size");
    if (up.size() != size_t(n) * (n - 1)) throw std::invalid_argument("up edge array has wrong size");
}

}  // namespace

SquareLattice::SquareLattice(int n, std::vector<double> loops, std::vector<double> right,
                             std::vector<double> up)
    : n_(n),
      loops_(std::move(loops)),
      right_(std::move(right)),
      up_(std::move(up)),
      order_(n) {
    check_sizes(n_, loops_, right_, up_);
    diag_.resize(loops_.size());
    for (size_t i = 0; i < loops_.size(); ++i) {
        if (loops_[i] == 0.0)
            throw std::invalid_argument("zero loop weight makes the adjacency singular");
        diag_[i] = 1.0 / loops_[i];
    }
}

SquareLattice square_from_diag(int n, std::vector<double> diag, std::vector<double> right,
                               std::vector<double> up) {
    std::vector<double> loops(diag.size());
    for (size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0.0)
            throw std::invalid_argument("zero matching weight makes the adjacency singular");
        loops[i] = 1.0 / diag[i];
    }
    SquareLattice sq(n, std::move(loops), std::move(right), std::move(up));
    sq.diag_ = std::move(diag);  // keep the given entries bit-exact
    return sq;
}

bool SquareLattice::has_edge(const Vertex& u, const Vertex& v) const {
    if (!in_grid(u, n_) || !in_grid(v, n_)) return false;
    return (v.x == u.x + 1 && v.y == u.y) || (v.x == u.x && v.y == u.y + 1);
}

double SquareLattice::edge_weight(const Vertex& u, const Vertex& v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("no such lattice edge");
    return v.y == u.y ? right(u) : up(u);
}

SquareLattice build_square_lattice(int n, const std::vector<double>& loops,
                                   const std::vector<double>& right,
                                   const std::vector<double>& up) {
    return SquareLattice(n, loops, right, up);
}

HexLattice::HexLattice(int n, std::vector<double> blue, std::vector<double> red_right,
                       std::vector<double> red_up)
    : n_(n),
      blue_(std::move(blue)),
      red_right_(std::move(red_right)),
      red_up_(std::move(red_up)) {
    check_sizes(n_, blue_, red_right_, red_up_);
    for (double b : blue_)
        if (b == 0.0) throw std::invalid_argument("zero matching edge weight");
}

double HexLattice::red(const Vertex& u, const Vertex& v) const {
    if (v.x == u.x + 1 && v.y == u.y) return red_right_[(u.y - 1) * (n_ - 1) + (u.x - 1)];
    if (v.x == u.x && v.y == u.y + 1) return red_up_[(u.y - 1) * n_ + (u.x - 1)];
    throw std::invalid_argument("no such red edge");
}

std::vector<int> HexLattice::level_hexagon_counts() const {
    std::vector<int> counts;
    counts.reserve(2 * n_ - 1);
    for (int k = 0; k <= 2 * n_ - 2; ++k) counts.push_back(std::min(k, 2 * n_ - k - 2));
    return counts;
}

HexLattice build_hex_from_square(const SquareLattice& sq) {
    int n = sq.n();
    std::vector<double> blue(size_t(n) * n);
    for (int i = 0; i < n * n; ++i) blue[i] = sq.diag(site_vertex(i, n));
    std::vector<double> rr(sq.right_edges().size()), ru(sq.up_edges().size());
    for (size_t i = 0; i < rr.size(); ++i) rr[i] = -sq.right_edges()[i];
    for (size_t i = 0; i < ru.size(); ++i) ru[i] = -sq.up_edges()[i];
    HexLattice hex(n, std::move(blue), std::move(rr), std::move(ru));
    hex.dual_loops_ = sq.loops();
    return hex;
}

SquareLattice build_square_from_hex(const HexLattice& hex) {
    int n = hex.n();
    std::vector<double> right(hex.red_right().size()), up(hex.red_up().size());
    for (size_t i = 0; i < right.size(); ++i) right[i] = -hex.red_right()[i];
    for (size_t i = 0; i < up.size(); ++i) up[i] = -hex.red_up()[i];
    if (hex.dual_loops_.size() == hex.blues().size()) {
        SquareLattice sq(n, hex.dual_loops_, std::move(right), std::move(up));
        sq.diag_ = hex.blues();
        return sq;
    }
    return square_from_diag(n, hex.blues(), std::move(right), std::move(up));
}

double AdjacencyMatrix::norm_estimate() const {
    double m = 0;
    if (is_dense) {
        for (int j = 0; j < dense.cols(); ++j) {
            double s = dense.col(j).cwiseAbs().sum();
            m = std::max(m, s);
        }
        return m;
    }
    for (const auto& row : rows) {
        double s = 0;
        for (auto& [c, v] : row) s += std::fabs(v);
        m = std::max(m, s);
    }
    return m;
}

AdjacencyMatrix square_adjacency(const SquareLattice& sq, MatrixStorage storage) {
    int n = sq.n();
    int dim = n * n;
    const CanonicalOrder& ord = sq.order();
    bool dense = storage == MatrixStorage::dense ||
                 (storage == MatrixStorage::automatic && dim <= kDenseDimensionCutoff);
    AdjacencyMatrix A;
    A.dim = dim;
    A.symmetric = false;
    A.is_dense = dense;

    auto emit = [&](int r, int c, double v, auto&& sink) { sink(r, c, v); };
    auto fill = [&](auto&& sink) {
        for (int r = 0; r < dim; ++r) {
            const Vertex u = ord.vertex_at(r);
            emit(r, r, sq.diag(u), sink);
            if (sq.has_right(u)) emit(r, ord.rank_of({u.x + 1, u.y}), -sq.right(u), sink);
            if (sq.has_up(u)) emit(r, ord.rank_of({u.x, u.y + 1}), -sq.up(u), sink);
        }
    };
    if (dense) {
        A.dense = Eigen::MatrixXd::Zero(dim, dim);
        fill([&](int r, int c, double v) { A.dense(r, c) = v; });
    } else {
        A.rows.assign(dim, {});
        fill([&](int r, int c, double v) { A.rows[r].emplace_back(c, v); });
    }
    return A;
}

AdjacencyMatrix hex_adjacency(const HexLattice& hex, MatrixStorage storage) {
    int n = hex.n();
    int half = n * n;
    int dim = 2 * half;
    CanonicalOrder ord(n);
    bool dense = storage == MatrixStorage::dense ||
                 (storage == MatrixStorage::automatic && dim <= 2 * kDenseDimensionCutoff);
    AdjacencyMatrix A;
    A.dim = dim;
    A.symmetric = true;
    A.is_dense = dense;

    auto fill = [&](auto&& sink) {
        auto both = [&](int i, int j, double v) {
            sink(i, half + j, v);
            sink(half + j, i, v);
        };
        for (int r = 0; r < half; ++r) {
            const Vertex u = ord.vertex_at(r);
            both(r, r, hex.blue(u));
            if (u.x < n) both(r, ord.rank_of({u.x + 1, u.y}), hex.red(u, {u.x + 1, u.y}));
            if (u.y < n) both(r, ord.rank_of({u.x, u.y + 1}), hex.red(u, {u.x, u.y + 1}));
        }
    };
    if (dense) {
        A.dense = Eigen::MatrixXd::Zero(dim, dim);
        fill([&](int r, int c, double v) { A.dense(r, c) = v; });
    } else {
        A.rows.assign(dim, {});
        fill([&](int r, int c, double v) { A.rows[r].emplace_back(c, v); });
    }
    return A;
}

std::string lattice_to_json(const SquareLattice& sq) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = sq.n();
    j["loops"] = sq.loops();
    j["right_edges"] = sq.right_edges();
    j["up_edges"] = sq.up_edges();
    return j.dump();
}

SquareLattice lattice_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema_version", 0) != 1)
        throw std::invalid_argument("unsupported lattice schema version");
    return SquareLattice(j.at("n").get<int>(), j.at("loops").get<std::vector<double>>(),
                         j.at("right_edges").get<std::vector<double>>(),
                         j.at("up_edges").get<std::vector<double>>());
}

}  // namespace polymerlab::lattice
